/* Deterministic import/export of chemistries, matrices, polynomials, and
 * reports.
 *
 * Formats: chemistry as JSON (round-trips to an equal Chemistry), the
 * periodic table as CSV, the decay graph as DOT, polynomials as JSON arrays
 * of decimal coefficient strings (ascending degree), sparse matrices as
 * "row col value" triplet text with a size header, length ratios as
 * two-column data files, and certifications as JSON reports.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "looksay/certify.hpp"
#include "looksay/chemistry.hpp"
#include "looksay/digits.hpp"
#include "looksay/polynomial.hpp"
#include "looksay/run_chemistry.hpp"
#include "looksay/sparse_matrix.hpp"

namespace looksay {

/* Chemistry <-> JSON.  Strings longer than rle_threshold digits are stored
 * in run notation (marked), shorter ones as plain text; both import. */
std::string chemistry_to_json(const Chemistry& chem, std::size_t rle_threshold = 1000);
Chemistry chemistry_from_json(const std::string& json_text);

/* Periodic table CSV: id,length,display,decay,abundance_percent. */
std::string periodic_table_csv(const std::vector<TableRow>& rows);

/* Decay graph in DOT: one node per element, one edge per distinct decay
 * product with a multiplicity label. */
std::string decay_graph_dot(const Chemistry& chem);

/* Polynomial <-> JSON array of decimal strings, ascending degree. */
std::string polynomial_to_json(const IntPoly& p);
IntPoly polynomial_from_json(const std::string& json_text);

/* Sparse matrix <-> triplet text: a "rows cols nonzeros" header line, then
 * one "row col value" line per entry (1-based indices, column-major order). */
std::string matrix_to_triplet_text(const SparseMatrix& m);
SparseMatrix matrix_from_triplet_text(const std::string& text);

/* Two-column "index value" lines, one per ratio, 10 significant digits. */
std::string ratios_to_dat(const std::vector<Ratio>& ratios);

/* Certification report JSON: degree, status, primes, patterns. */
std::string certification_to_json(const GrowthDegreeResult& result);

/* Run chemistry JSON export (one way; the j-sweep artifact). */
std::string run_chemistry_to_json(const RunChemistry& chem);

} // namespace looksay
