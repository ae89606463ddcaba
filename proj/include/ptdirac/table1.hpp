#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptdirac/model.hpp"
#include "ptdirac/spectrum.hpp"

namespace ptdirac {

// One cell of the published 5-digit reference table (E in units of alpha^2
// absorbed back out; value is the energy itself). Absent cells mark levels
// the reference reports as unbound.
struct ReferenceCell {
    int dim = 0;
    int n = 0;
    double alpha = 0.0;
    std::optional<double> energy; // nullopt: printed as "---"
};

// All 60 cells (dim in {3,4,5}, n in 1..5, alpha in {1e-4,1e-3,5e-3,1e-2}).
const std::vector<ReferenceCell>& reference_cells();

// The same data as CSV text: header dim,n,alpha,e_paper,present with absent
// energies left empty. Byte-identical to data/table1.csv.
std::string table1_csv();

// Comparison of one computed cell against the reference.
struct CellComparison {
    ReferenceCell ref;
    std::optional<double> computed;       // nullopt: no bound state found
    std::optional<double> oracle;         // filled only when requested
    std::optional<double> rel_deviation;  // |computed - ref| / |ref|
    bool existence_agrees = false;        // both present or both absent
};

struct ComparisonReport {
    std::vector<CellComparison> cells;
    int agree_present = 0;   // both solved
    int agree_absent = 0;    // both unbound
    int disagree = 0;        // one side has a value, the other does not
    // Deviation statistics over cells where both sides have values.
    double min_rel_deviation = 0.0;
    double max_rel_deviation = 0.0;
    double mean_rel_deviation = 0.0;
    // Degeneracy of the published values: cells (n+1, D) and (n, D+2) print
    // the same 5-digit number; measured in units of the last printed digit.
    double paper_pair_max_print_ulp = 0.0;
    // Degeneracy of the computed values for the same pairs (bitwise).
    bool computed_degeneracy_bit_identical = false;
    // Strict growth of computed energies in D and in alpha where both cells
    // of a step are present.
    bool computed_monotonic_in_dim = false;
    bool computed_monotonic_in_alpha = false;
};

// Solves every reference cell with the caption parameters
// (mu = c1 = v0 = s0 = 1) and compares. `with_oracle` additionally runs the
// finite-difference solver per present cell.
ComparisonReport build_comparison_report(bool with_oracle = false);

} // namespace ptdirac
