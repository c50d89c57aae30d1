#include "looksay/serialize.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "looksay/errors.hpp"

namespace looksay {

namespace {

using nlohmann::json;

json element_to_json(const Element& element, std::size_t rle_threshold) {
    json out;
    out["id"] = element.id;
    if (element.string.size() > rle_threshold)
        out["rle"] = run_notation(element.string);
    else
        out["string"] = element.string.to_text();
    out["decay"] = element.decay;
    out["persistent"] = element.persistent;
    return out;
}

Element element_from_json(const json& in, unsigned base) {
    Element element;
    element.id = in.at("id").get<std::uint32_t>();
    if (in.contains("rle"))
        element.string = parse_run_notation(in.at("rle").get<std::string>(), base);
    else
        element.string = DigitString::from_text(in.at("string").get<std::string>(), base);
    element.decay = in.at("decay").get<std::vector<std::uint32_t>>();
    element.persistent = in.value("persistent", false);
    return element;
}

} // namespace

std::string chemistry_to_json(const Chemistry& chem, std::size_t rle_threshold) {
    json out;
    out["rule"] = chem.rule.name();
    out["base"] = chem.rule.base;
    out["predicate"] = chem.predicate_tag;
    out["ordered"] = chem.ordered;
    out["ordering"] = chem.ordering;
    out["elements"] = json::array();
    for (const Element& element : chem.elements)
        out["elements"].push_back(element_to_json(element, rle_threshold));
    out["exotic"] = json::array();
    for (const Element& element : chem.exotics)
        out["exotic"].push_back(element_to_json(element, rle_threshold));
    return out.dump(2) + "\n";
}

Chemistry chemistry_from_json(const std::string& json_text) {
    json in;
    try {
        in = json::parse(json_text);
    } catch (const json::exception& e) {
        throw domain_error(std::string("chemistry JSON malformed: ") + e.what());
    }
    Chemistry chem;
    try {
        const unsigned base = in.at("base").get<unsigned>();
        chem.rule = RuleSpec::parse(in.at("rule").get<std::string>(), base);
        chem.predicate_tag = in.value("predicate", std::string{});
        chem.ordered = in.value("ordered", false);
        chem.ordering = in.value("ordering", std::vector<std::uint32_t>{});
        for (const json& e : in.at("elements")) chem.elements.push_back(element_from_json(e, base));
        if (in.contains("exotic"))
            for (const json& e : in.at("exotic")) chem.exotics.push_back(element_from_json(e, base));
    } catch (const json::exception& e) {
        throw domain_error(std::string("chemistry JSON malformed: ") + e.what());
    }
    for (std::size_t i = 0; i < chem.elements.size(); ++i) {
        if (chem.elements[i].id != i + 1)
            throw domain_error("chemistry JSON element ids must be consecutive from 1");
    }
    for (std::size_t i = 0; i < chem.exotics.size(); ++i) {
        if (chem.exotics[i].id != chem.elements.size() + i + 1)
            throw domain_error("chemistry JSON exotic ids must continue the element ids");
    }
    chem.rebuild_index();
    return chem;
}

std::string periodic_table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "id,length,display,decay,abundance_percent\n";
    char buffer[64];
    for (const TableRow& row : rows) {
        std::snprintf(buffer, sizeof buffer, "%.8f", row.abundance_percent);
        out << row.id << ',' << row.length << ',' << row.display << ',' << row.decay_expr << ','
            << buffer << '\n';
    }
    return out.str();
}

std::string decay_graph_dot(const Chemistry& chem) {
    std::ostringstream out;
    out << "digraph decay {\n";
    for (const Element& element : chem.elements) out << "  e" << element.id << ";\n";
    for (const Element& element : chem.elements) {
        // one edge per distinct product, labelled with its multiplicity
        std::vector<std::pair<std::uint32_t, std::size_t>> counts;
        for (std::uint32_t target : element.decay) {
            bool found = false;
            for (auto& [id, count] : counts) {
                if (id == target) {
                    ++count;
                    found = true;
                    break;
                }
            }
            if (!found) counts.emplace_back(target, 1);
        }
        for (const auto& [target, count] : counts) {
            out << "  e" << element.id << " -> e" << target;
            if (count > 1) out << " [label=\"" << count << "\"]";
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string polynomial_to_json(const IntPoly& p) {
    json out = json::array();
    for (const mpz_class& c : p.coefficients()) out.push_back(c.get_str());
    return out.dump() + "\n";
}

IntPoly polynomial_from_json(const std::string& json_text) {
    json in;
    try {
        in = json::parse(json_text);
    } catch (const json::exception& e) {
        throw domain_error(std::string("polynomial JSON malformed: ") + e.what());
    }
    if (in.is_object() && in.contains("coefficients")) in = in.at("coefficients");
    if (!in.is_array()) throw domain_error("polynomial JSON must be an array of decimal strings");
    std::vector<std::string> coefficients;
    for (const json& c : in) {
        if (c.is_string())
            coefficients.push_back(c.get<std::string>());
        else if (c.is_number_integer())
            coefficients.push_back(std::to_string(c.get<long long>()));
        else
            throw domain_error("polynomial JSON coefficients must be strings or integers");
    }
    return IntPoly::from_strings(coefficients);
}

std::string matrix_to_triplet_text(const SparseMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t k = m.col_start(j); k < m.col_start(j + 1); ++k)
            out << m.row_index(k) + 1 << ' ' << j + 1 << ' ' << m.value(k) << '\n';
    return out.str();
}

SparseMatrix matrix_from_triplet_text(const std::string& text) {
    std::istringstream in(text);
    std::size_t rows = 0, cols = 0, nonzeros = 0;
    if (!(in >> rows >> cols >> nonzeros))
        throw domain_error("matrix text must start with a rows cols nonzeros header");
    std::vector<Triplet> entries;
    entries.reserve(nonzeros);
    std::size_t r = 0, c = 0;
    std::int64_t v = 0;
    while (in >> r >> c >> v) {
        if (r == 0 || c == 0) throw domain_error("matrix text uses 1-based indices");
        entries.push_back({r - 1, c - 1, v});
    }
    if (entries.size() != nonzeros)
        throw domain_error("matrix text entry count does not match its header");
    return SparseMatrix::from_triplets(rows, cols, std::move(entries));
}

std::string ratios_to_dat(const std::vector<Ratio>& ratios) {
    std::ostringstream out;
    char buffer[64];
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        std::snprintf(buffer, sizeof buffer, "%.10g", ratios[i].value());
        out << i + 1 << ' ' << buffer << '\n';
    }
    return out.str();
}

std::string certification_to_json(const GrowthDegreeResult& result) {
    json out;
    if (result.degree >= 0)
        out["degree"] = result.degree;
    else
        out["degree"] = nullptr;
    switch (result.certification.status) {
        case Certification::Status::Irreducible: out["status"] = "irreducible"; break;
        case Certification::Status::Reducible: out["status"] = "reducible"; break;
        case Certification::Status::Inconclusive: out["status"] = "inconclusive"; break;
    }
    out["primes"] = result.certification.primes_used;
    out["patterns"] = result.certification.patterns;
    out["note"] = result.note;
    return out.dump(2) + "\n";
}

std::string run_chemistry_to_json(const RunChemistry& chem) {
    json out;
    out["rule"] = chem.rule().name();
    out["base"] = chem.rule().base;
    out["orbit_cuts"] = chem.orbit_cuts();
    out["elements"] = json::array();
    for (const RunElement& element : chem.elements()) {
        json e;
        e["id"] = element.id;
        e["rle"] = run_text(element.runs);
        e["decay"] = element.decay;
        out["elements"].push_back(e);
    }
    return out.dump(2) + "\n";
}

} // namespace looksay
