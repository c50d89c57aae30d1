#include "looksay/chemistry.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace looksay {

const Element& Chemistry::by_id(std::uint32_t id) const {
    if (id >= 1 && id <= elements.size()) return elements[id - 1];
    if (id > elements.size() && id <= elements.size() + exotics.size())
        return exotics[id - elements.size() - 1];
    throw domain_error("no element with id " + std::to_string(id));
}

std::optional<std::uint32_t> Chemistry::id_of(const DigitString& s) const {
    auto it = index_.find(s.values());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void Chemistry::rebuild_index() {
    index_.clear();
    index_.reserve(elements.size() + exotics.size());
    for (const Element& e : elements) index_.emplace(e.string.values(), e.id);
    for (const Element& e : exotics) index_.emplace(e.string.values(), e.id);
}

std::vector<DigitString> decay_of(const DigitString& s, const RuleSpec& rule,
                                  const SplitPredicate& pred) {
    return split(say_step(s, rule), pred);
}

namespace {

bool ends_in_zero(const DigitString& s) { return s[s.size() - 1] == 0; }

/* Tarjan strongly-connected components, iterative.  Returns component ids and
 * sets persistent[u] for every u reachable from a component containing a
 * cycle (size > 1 or a self-loop). */
void mark_persistent(const std::vector<std::vector<std::uint32_t>>& adj,
                     const std::vector<bool>& self_loop, std::vector<bool>& persistent) {
    const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> num(n, kUnset), low(n, 0), comp(n, kUnset);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::uint32_t counter = 0, ncomp = 0;

    struct Frame {
        std::uint32_t v;
        std::size_t edge;
    };
    std::vector<Frame> frames;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (num[root] != kUnset) continue;
        frames.push_back({root, 0});
        num[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < adj[f.v].size()) {
                std::uint32_t w = adj[f.v][f.edge++];
                if (num[w] == kUnset) {
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                if (low[f.v] == num[f.v]) {
                    std::uint32_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = ncomp;
                    } while (w != f.v);
                    ++ncomp;
                }
                std::uint32_t v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }

    std::vector<std::uint32_t> comp_size(ncomp, 0);
    std::vector<bool> comp_cyclic(ncomp, false);
    for (std::uint32_t u = 0; u < n; ++u) {
        ++comp_size[comp[u]];
        if (self_loop[u]) comp_cyclic[comp[u]] = true;
    }

    persistent.assign(n, false);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < n; ++u)
        if (comp_cyclic[comp[u]] || comp_size[comp[u]] > 1) {
            persistent[u] = true;
            queue.push_back(u);
        }
    while (!queue.empty()) {
        std::uint32_t u = queue.back();
        queue.pop_back();
        for (std::uint32_t w : adj[u])
            if (!persistent[w]) {
                persistent[w] = true;
                queue.push_back(w);
            }
    }
}

} // namespace

Chemistry discover_elements(const DigitString& seed, const RuleSpec& rule,
                            const SplitPredicate& pred, const DiscoveryLimits& limits) {
    if (seed.empty()) throw domain_error("discovery requires a nonempty seed");

    std::vector<DigitString> strings;              /* provisional id -> string */
    std::vector<std::vector<std::uint32_t>> decays; /* provisional ids */
    std::vector<std::size_t> round;
    std::unordered_map<std::string, std::uint32_t> interned;
    std::vector<std::uint32_t> queue;

    /* Assembles a Chemistry from the provisional store: strings ending in 0
     * become the matrix elements (ids 1..n, discovery order), the rest become
     * exotics (ids n+1..).  Decay lists are remapped to the final ids. */
    auto assemble = [&](bool with_persistence) {
        const std::uint32_t total = static_cast<std::uint32_t>(strings.size());
        std::vector<std::uint32_t> final_id(total, 0);
        std::uint32_t n = 0;
        for (std::uint32_t u = 0; u < total; ++u)
            if (ends_in_zero(strings[u])) final_id[u] = ++n;
        std::uint32_t next = n;
        for (std::uint32_t u = 0; u < total; ++u)
            if (!ends_in_zero(strings[u])) final_id[u] = ++next;

        Chemistry chem;
        chem.rule = rule;
        chem.predicate_tag = pred.tag;
        chem.elements.resize(n);
        chem.exotics.resize(total - n);
        for (std::uint32_t u = 0; u < total; ++u) {
            Element e;
            e.id = final_id[u];
            e.string = strings[u];
            e.decay.reserve(decays[u].size());
            for (std::uint32_t d : decays[u]) e.decay.push_back(final_id[d]);
            if (e.id <= n)
                chem.elements[e.id - 1] = std::move(e);
            else
                chem.exotics[e.id - n - 1] = std::move(e);
        }

        if (with_persistence && total > 0) {
            std::vector<std::vector<std::uint32_t>> adj(total);
            std::vector<bool> self_loop(total, false);
            for (std::uint32_t u = 0; u < total; ++u) {
                adj[u] = decays[u];
                std::sort(adj[u].begin(), adj[u].end());
                adj[u].erase(std::unique(adj[u].begin(), adj[u].end()), adj[u].end());
                for (std::uint32_t w : adj[u])
                    if (w == u) self_loop[u] = true;
            }
            std::vector<bool> persistent;
            mark_persistent(adj, self_loop, persistent);
            for (std::uint32_t u = 0; u < total; ++u) {
                Element& e = final_id[u] <= n ? chem.elements[final_id[u] - 1]
                                              : chem.exotics[final_id[u] - n - 1];
                e.persistent = persistent[u];
            }
        }
        chem.rebuild_index();
        return chem;
    };

    auto intern = [&](DigitString&& c, std::size_t r) -> std::uint32_t {
        auto it = interned.find(c.values());
        if (it != interned.end()) return it->second;
        if (c.size() > limits.max_digits)
            throw discovery_overflow("element of " + std::to_string(c.size()) +
                                         " digits exceeds the per-element cap of " +
                                         std::to_string(limits.max_digits),
                                     assemble(false));
        if (strings.size() >= limits.max_elements)
            throw discovery_overflow(
                "element count exceeds the cap of " + std::to_string(limits.max_elements),
                assemble(false));
        if (r > limits.max_iterations)
            throw discovery_overflow(
                "closure still growing after " + std::to_string(limits.max_iterations) +
                    " rounds",
                assemble(false));
        std::uint32_t id = static_cast<std::uint32_t>(strings.size());
        interned.emplace(c.values(), id);
        strings.push_back(std::move(c));
        decays.emplace_back();
        round.push_back(r);
        queue.push_back(id);
        return id;
    };

    /* The rewrite of one capped element can be this much larger: every run
     * contributes at most max(j, numeral length) numeral copies plus digit
     * copies; 64x covers every supported rule and base. */
    const std::uint64_t say_budget =
        static_cast<std::uint64_t>(limits.max_digits) *
        std::max<std::uint64_t>(64, rule.kind == RuleKind::JStutter ? 2ull * rule.j : 0);

    try {
        for (DigitString& c : split(say_step(seed, rule, say_budget), pred))
            intern(std::move(c), 0);
        for (std::size_t qhead = 0; qhead < queue.size(); ++qhead) {
            const std::uint32_t u = queue[qhead];
            std::vector<DigitString> chunks = split(say_step(strings[u], rule, say_budget), pred);
            std::vector<std::uint32_t> ids;
            ids.reserve(chunks.size());
            for (DigitString& c : chunks) ids.push_back(intern(std::move(c), round[u] + 1));
            decays[u] = std::move(ids);
        }
    } catch (const discovery_overflow&) {
        throw;
    } catch (const budget_error& e) {
        throw discovery_overflow(std::string("rewrite grew past the discovery budget: ") +
                                     e.what(),
                                 assemble(false));
    }

    return assemble(true);
}

SparseMatrix build_decay_matrix(const Chemistry& chem) {
    const std::size_t n = chem.elements.size();
    std::vector<Triplet> triplets;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::uint32_t id : chem.elements[j].decay) {
            if (id < 1 || id > n)
                throw domain_error("decay of element " + std::to_string(j + 1) +
                                   " references exotic id " + std::to_string(id));
            triplets.push_back({id - 1, j, 1});
        }
    }
    return SparseMatrix::from_triplets(n, n, std::move(triplets));
}

Chemistry order_by_abundance(const Chemistry& chem, const std::vector<mpf_class>& abundance,
                             double tie_rel_tol) {
    const std::size_t n = chem.elements.size();
    if (abundance.size() != n)
        throw domain_error("abundance vector length " + std::to_string(abundance.size()) +
                           " does not match element count " + std::to_string(n));

    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return abundance[a] > abundance[b]; });

    /* Resolve near-equal groups deterministically by (length, lexicographic). */
    mpf_class tol(tie_rel_tol);
    std::size_t g = 0;
    while (g < n) {
        std::size_t r = g + 1;
        while (r < n && abundance[order[g]] - abundance[order[r]] <= tol * abundance[order[g]])
            ++r;
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(g),
                  order.begin() + static_cast<std::ptrdiff_t>(r),
                  [&](std::uint32_t a, std::uint32_t b) {
                      return chem.elements[a].string.shorter_lex_less(chem.elements[b].string);
                  });
        g = r;
    }

    std::vector<std::uint32_t> old_to_new(n + chem.exotics.size() + 1, 0);
    for (std::size_t k = 0; k < n; ++k) old_to_new[order[k] + 1] = static_cast<std::uint32_t>(k + 1);
    for (std::size_t k = n; k < n + chem.exotics.size(); ++k)
        old_to_new[k + 1] = static_cast<std::uint32_t>(k + 1);

    Chemistry out;
    out.rule = chem.rule;
    out.predicate_tag = chem.predicate_tag;
    out.ordered = true;
    out.ordering.resize(n);
    out.elements.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Element& src = chem.elements[order[k]];
        Element e;
        e.id = static_cast<std::uint32_t>(k + 1);
        e.string = src.string;
        e.persistent = src.persistent;
        e.decay.reserve(src.decay.size());
        for (std::uint32_t d : src.decay) e.decay.push_back(old_to_new[d]);
        out.elements[k] = std::move(e);
        out.ordering[k] = order[k] + 1;
    }
    out.exotics = chem.exotics;
    for (Element& e : out.exotics)
        for (std::uint32_t& d : e.decay) d = old_to_new[d];
    out.rebuild_index();
    return out;
}

std::string render_decay_expression(const std::vector<std::uint32_t>& ids) {
    struct Token {
        char kind;
        std::uint32_t idx;
        bool operator==(const Token&) const = default;
    };
    const std::size_t L = ids.size();
    auto ones_then = [&](std::size_t at, std::size_t count) {
        if (at + count >= L || ids[at + count] == 1) return false;
        for (std::size_t k = at; k < at + count; ++k)
            if (ids[k] != 1) return false;
        return true;
    };
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < L) {
        if (ids[i] == 1 && ones_then(i, 10)) {
            tokens.push_back({'g', ids[i + 10]});
            i += 11;
        } else if (ids[i] == 1 && ones_then(i, 9)) {
            tokens.push_back({'f', ids[i + 9]});
            i += 10;
        } else {
            tokens.push_back({'e', ids[i]});
            ++i;
        }
    }
    std::string out;
    std::size_t j = 0;
    while (j < tokens.size()) {
        std::size_t r = j;
        while (r < tokens.size() && tokens[r] == tokens[j]) ++r;
        if (!out.empty()) out.push_back(' ');
        out.push_back(tokens[j].kind);
        out += std::to_string(tokens[j].idx);
        if (r - j > 1) {
            out.push_back('^');
            out += std::to_string(r - j);
        }
        j = r;
    }
    return out;
}

std::vector<TableRow> periodic_table_export(const Chemistry& chem,
                                            const std::vector<double>& abundance_percent,
                                            std::size_t display_threshold) {
    if (!chem.ordered) throw domain_error("table export requires an abundance-ordered chemistry");
    if (abundance_percent.size() != chem.elements.size())
        throw domain_error("abundance vector does not match element count");
    std::vector<TableRow> rows;
    rows.reserve(chem.elements.size());
    for (const Element& e : chem.elements) {
        TableRow row;
        row.id = e.id;
        row.length = e.string.size();
        row.display =
            e.string.size() <= display_threshold ? e.string.to_text() : run_notation(e.string);
        row.decay_expr = render_decay_expression(e.decay);
        row.abundance_percent = abundance_percent[e.id - 1];
        rows.push_back(std::move(row));
    }
    return rows;
}

TailReport tail_analysis(const DigitString& seed, const RuleSpec& rule,
                         const SplitPredicate& pred, std::size_t max_terms) {
    if (seed.empty()) throw domain_error("tail analysis requires a nonempty seed");
    if (max_terms < 1) throw domain_error("tail analysis requires max_terms >= 1");

    /* The terminal chunk evolves on its own: the last chunk of term k+1 is
     * the last chunk of the rewrite of the last chunk of term k (the cut in
     * front of it never heals, since the piece before it keeps ending in 0
     * and it keeps starting nonzero). */
    std::vector<DigitString> terminals;
    std::unordered_map<std::string, std::size_t> first_seen;
    DigitString t = split(seed, pred).back();
    terminals.push_back(t);
    first_seen.emplace(t.values(), 0);
    for (std::size_t term = 1; term <= max_terms; ++term) {
        t = split(say_step(t, rule), pred).back();
        auto [it, fresh] = first_seen.emplace(t.values(), term);
        if (!fresh) {
            TailReport rep;
            rep.seed = seed;
            rep.first_cycle_term = it->second;
            rep.trail.assign(terminals.begin(),
                             terminals.begin() + static_cast<std::ptrdiff_t>(it->second));
            rep.cycle.assign(terminals.begin() + static_cast<std::ptrdiff_t>(it->second),
                             terminals.end());
            std::unordered_set<std::string> noted;
            for (const DigitString& x : terminals)
                if (!ends_in_zero(x) && noted.insert(x.values()).second) rep.exotic.push_back(x);
            return rep;
        }
        terminals.push_back(t);
    }
    TailReport partial;
    partial.seed = seed;
    partial.trail = std::move(terminals);
    throw tail_overflow("terminal chunk did not repeat within " + std::to_string(max_terms) +
                            " terms",
                        std::move(partial));
}

AuditReport audit_seed(const DigitString& seed, const RuleSpec& rule, const SplitPredicate& pred,
                       const std::vector<DigitString>& common_set,
                       const std::vector<DigitString>& exotic_allowance, std::size_t max_terms,
                       std::size_t max_digits) {
    if (seed.empty()) throw domain_error("audit requires a nonempty seed");
    std::unordered_set<std::string> common, exotic;
    for (const DigitString& s : common_set) common.insert(s.values());
    for (const DigitString& s : exotic_allowance) exotic.insert(s.values());

    AuditReport rep;
    std::unordered_set<std::string> used;
    constexpr std::size_t kNoBadTerm = std::numeric_limits<std::size_t>::max();
    std::size_t last_bad = kNoBadTerm;
    std::vector<std::pair<std::size_t, DigitString>> last_bad_examples;

    DigitString term_string = seed;
    for (std::size_t term = 0;; ++term) {
        bool ok = true;
        std::vector<std::pair<std::size_t, DigitString>> examples;
        for (const DigitString& c : split(term_string, pred)) {
            if (common.count(c.values())) continue;
            if (exotic.count(c.values())) {
                if (used.insert(c.values()).second) rep.allowance_used.push_back(c);
                continue;
            }
            ok = false;
            if (examples.size() < 8) examples.emplace_back(term, c);
        }
        if (!ok) {
            last_bad = term;
            last_bad_examples = std::move(examples);
        }
        rep.terms_inspected = term + 1;
        if (term == max_terms) break;
        try {
            term_string = say_step(term_string, rule, max_digits);
        } catch (const budget_error&) {
            break;
        }
    }

    if (last_bad == kNoBadTerm) {
        rep.conformant = true;
        rep.first_conformant_term = 0;
    } else if (last_bad + 1 < rep.terms_inspected) {
        rep.conformant = true;
        rep.first_conformant_term = last_bad + 1;
    } else {
        rep.conformant = false;
        rep.violations = std::move(last_bad_examples);
    }
    return rep;
}

} // namespace looksay
