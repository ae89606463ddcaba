// Command-line surface for the bound-state solver: spectra, wavefunction
// samples, the reference-table comparison report, and the validation suite.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ptdirac/errors.hpp"
#include "ptdirac/format.hpp"
#include "ptdirac/kernels.hpp"
#include "ptdirac/model.hpp"
#include "ptdirac/oracle.hpp"
#include "ptdirac/specfun.hpp"
#include "ptdirac/spectrum.hpp"
#include "ptdirac/table1.hpp"
#include "ptdirac/wavefunction.hpp"

namespace {

using namespace ptdirac;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DomainError("cannot open output file: " + path);
    out.write(content.data(), std::streamsize(content.size()));
    if (!out)
        throw DomainError("failed writing output file: " + path);
}

std::string status_of(const GridRow& row) {
    return row.point ? "ok" : "absent";
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
    std::vector<int> dims;
    int n_max = 5;
    std::vector<double> alphas;
    double mu = 1.0, v0 = 1.0, s0 = 1.0, c1 = 1.0;
    std::string format = "csv";
    std::string out;
};

int run_spectrum(const SpectrumArgs& args) {
    ModelParams p;
    p.mu = args.mu;
    p.v0 = args.v0;
    p.s0 = args.s0;
    p.c1 = args.c1;
    std::vector<int> dims = args.dims.empty() ? std::vector<int>{3, 4, 5}
                                              : args.dims;
    std::vector<double> alphas =
        args.alphas.empty() ? std::vector<double>{1e-4, 1e-3, 5e-3, 1e-2}
                            : args.alphas;
    std::vector<int> ns;
    for (int n = 1; n <= args.n_max; ++n)
        ns.push_back(n);
    const std::vector<GridRow> rows = spectrum_grid(p, dims, ns, alphas);

    std::string text;
    if (args.format == "csv") {
        text += "dim,n,alpha,energy,eps,delta,status\n";
        for (const GridRow& row : rows) {
            std::vector<std::string> cells{
                std::to_string(row.dim), std::to_string(row.n),
                format_double(row.alpha)};
            if (row.point) {
                cells.push_back(format_double(row.point->energy));
                cells.push_back(format_double(row.point->eps));
                cells.push_back(format_double(row.point->delta));
            } else {
                cells.push_back("");
                cells.push_back("");
                cells.push_back("");
            }
            cells.push_back(status_of(row));
            text += csv_row(cells);
        }
    } else {
        JsonWriter w;
        w.begin_array();
        for (const GridRow& row : rows) {
            w.begin_object_in_array();
            w.key_value("dim", row.dim);
            w.key_value("n", row.n);
            w.key_value("alpha", row.alpha);
            if (row.point) {
                w.key_value("energy", row.point->energy);
                w.key_value("eps", row.point->eps);
                w.key_value("delta", row.point->delta);
            } else {
                w.key_null("energy");
                w.key_null("eps");
                w.key_null("delta");
            }
            w.key_value("status", status_of(row));
            w.end_object();
        }
        w.end_array();
        text = w.str() + "\n";
    }
    write_output(args.out, text);
    return 0;
}

// ------------------------------------------------------------ wavefunction

struct WavefunctionArgs {
    int dim = 3, nr = 0, ell = 0;
    double alpha = 1e-4, mu = 1.0, v0 = 1.0, s0 = 1.0, c1 = 1.0;
    int samples = 4096;
    double rmax = 0.0;
    std::string grid = "hybrid";
    std::string norm = "series";
    std::string format = "csv";
    std::string out;
};

int run_wavefunction(const WavefunctionArgs& args) {
    ModelParams p;
    p.mu = args.mu;
    p.v0 = args.v0;
    p.s0 = args.s0;
    p.c1 = args.c1;
    p.alpha = args.alpha;
    const QuantumNumbers q = QuantumNumbers::of(args.nr, args.ell, args.dim);

    SpectralPoint pt;
    try {
        pt = solve_level(p, q);
    } catch (const NoBoundState& nb) {
        std::ostringstream os;
        os << "no bound state for dim=" << args.dim << " nr=" << args.nr
           << " ell=" << args.ell << " alpha=" << format_double(args.alpha)
           << ": existence margin " << format_double(nb.report.margin) << "\n";
        std::fputs(os.str().c_str(), stderr);
        return 1;
    }

    GridSpec spec;
    spec.r_max = args.rmax;
    spec.count = args.samples;
    if (args.grid == "linear")
        spec.spacing = GridSpec::Spacing::linear;
    else if (args.grid == "log")
        spec.spacing = GridSpec::Spacing::logarithmic;
    else
        spec.spacing = GridSpec::Spacing::hybrid;
    const NormMethod method = (args.norm == "quadrature")
                                  ? NormMethod::quadrature
                                  : NormMethod::series;
    const RadialFunction rf = sample(pt, spec, method);

    std::string text;
    if (args.format == "csv") {
        text += "# norm=";
        text += norm_method_name(rf.norm_method);
        text += "\n";
        text += "r,F,G\n";
        for (std::size_t i = 0; i < rf.r.size(); ++i)
            text += csv_row({format_double(rf.r[i]), format_double(rf.F[i]),
                             format_double(rf.G[i])});
    } else {
        JsonWriter w;
        w.begin_object();
        w.key_value("norm", norm_method_name(rf.norm_method));
        w.key_value("norm_constant", rf.norm_constant);
        w.key_value("energy", pt.energy);
        w.key_value("eps", pt.eps);
        w.begin_array("samples");
        for (std::size_t i = 0; i < rf.r.size(); ++i) {
            w.begin_object_in_array();
            w.key_value("r", rf.r[i]);
            w.key_value("F", rf.F[i]);
            w.key_value("G", rf.G[i]);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        text = w.str() + "\n";
    }
    write_output(args.out, text);
    return 0;
}

// ----------------------------------------------------------------- table1

struct Table1Args {
    std::string out;
    std::string oracle = "off";
    bool dump = false;
};

std::string cell_label(const ReferenceCell& ref) {
    std::ostringstream os;
    os << "dim=" << ref.dim << " n=" << ref.n
       << " alpha=" << format_double(ref.alpha);
    return os.str();
}

int run_table1(const Table1Args& args) {
    if (args.dump) {
        write_output(args.out, table1_csv());
        return 0;
    }
    const bool with_oracle = args.oracle == "on";
    const ComparisonReport rep = build_comparison_report(with_oracle);

    JsonWriter w;
    w.begin_object();
    w.begin_object("parameters");
    w.key_value("mu", 1.0);
    w.key_value("v0", 1.0);
    w.key_value("s0", 1.0);
    w.key_value("c1", 1.0);
    w.end_object();
    w.key_value("oracle", with_oracle);
    w.begin_array("cells");
    for (const CellComparison& c : rep.cells) {
        w.begin_object_in_array();
        w.key_value("dim", c.ref.dim);
        w.key_value("n", c.ref.n);
        w.key_value("alpha", c.ref.alpha);
        if (c.ref.energy)
            w.key_value("e_paper", *c.ref.energy);
        else
            w.key_null("e_paper");
        if (c.computed)
            w.key_value("computed", *c.computed);
        else
            w.key_null("computed");
        if (with_oracle) {
            if (c.oracle)
                w.key_value("oracle", *c.oracle);
            else
                w.key_null("oracle");
        }
        if (c.rel_deviation)
            w.key_value("rel_deviation", *c.rel_deviation);
        else
            w.key_null("rel_deviation");
        w.key_value("existence_agrees", c.existence_agrees);
        w.end_object();
    }
    w.end_array();
    w.begin_object("summary");
    w.key_value("cells_total", int(rep.cells.size()));
    w.key_value("agree_present", rep.agree_present);
    w.key_value("agree_absent", rep.agree_absent);
    w.key_value("disagree", rep.disagree);
    w.key_value("min_rel_deviation", rep.min_rel_deviation);
    w.key_value("max_rel_deviation", rep.max_rel_deviation);
    w.key_value("mean_rel_deviation", rep.mean_rel_deviation);
    w.key_value("paper_pair_max_print_ulp", rep.paper_pair_max_print_ulp);
    w.key_value("computed_degeneracy_bit_identical",
                rep.computed_degeneracy_bit_identical);
    w.key_value("computed_monotonic_in_dim", rep.computed_monotonic_in_dim);
    w.key_value("computed_monotonic_in_alpha", rep.computed_monotonic_in_alpha);
    w.begin_array("reference_absent_but_state_predicted");
    for (const CellComparison& c : rep.cells)
        if (!c.ref.energy && c.computed)
            w.value(cell_label(c.ref));
    w.end_array();
    w.key_value("note",
                "computed roots of the level condition deviate systematically "
                "from the published 5-digit values; the deviation is reported "
                "as a finding, not asserted away");
    w.end_object();
    w.end_object();
    write_output(args.out, w.str() + "\n");
    return 0;
}

// --------------------------------------------------------------- validate

struct ValidateArgs {
    bool fast = false;
    unsigned seed = 0;
};

class PropertyRunner {
public:
    void pass_fail(const std::string& name, bool ok, double measured,
                   double limit) {
        std::ostringstream os;
        os << (ok ? "PASS " : "FAIL ") << name
           << " measured=" << format_double(measured)
           << " limit=" << format_double(limit) << "\n";
        lines_ += os.str();
        if (!ok)
            ++failures_;
        ++total_;
    }

    void skip(const std::string& name) {
        lines_ += "SKIP " + name + " (fast)\n";
    }

    int failures() const { return failures_; }

    std::string finish() const {
        std::ostringstream os;
        os << lines_ << "RESULT checks=" << total_ << " failures=" << failures_
           << "\n";
        return os.str();
    }

private:
    std::string lines_;
    int failures_ = 0;
    int total_ = 0;
};

// Reference grid shared by several properties.
struct SolvedCell {
    ReferenceCell ref;
    QuantumNumbers q;
    ModelParams p;
    SpectralPoint pt;
};

std::vector<SolvedCell> solve_reference_grid() {
    std::vector<SolvedCell> cells;
    for (const ReferenceCell& ref : reference_cells()) {
        SolvedCell c;
        c.ref = ref;
        c.p = ModelParams{};
        c.p.alpha = ref.alpha;
        const int ell = (ref.n - 1) % 2;
        c.q = QuantumNumbers::of((ref.n - 1 - ell) / 2, ell, ref.dim);
        try {
            c.pt = solve_level(c.p, c.q);
        } catch (const NoBoundState&) {
            continue; // surfaces as a count mismatch in the grid property
        }
        cells.push_back(c);
    }
    return cells;
}

int run_validate(const ValidateArgs& args) {
    PropertyRunner r;
    std::mt19937 rng(args.seed);

    // --- special functions ---------------------------------------------
    {
        double worst = 0.0;
        const double params[] = {-0.5, 0.0, 0.5, 1.5, 6.0};
        for (double a : params)
            for (double b : params)
                for (int n = 0; n <= 6; ++n)
                    for (int k = 0; k <= 20; ++k) {
                        const double x = -0.9 + 0.09 * k;
                        const JacobiParams jp{n, a, b};
                        const double lhs = jacobi_eval(jp, x);
                        const double rhs = jacobi_rodrigues(jp, x);
                        worst = std::max(worst, std::fabs(lhs - rhs) /
                                                    (1.0 + std::fabs(rhs)));
                    }
        r.pass_fail("specfun_recurrence_vs_rodrigues", worst <= 1e-8, worst,
                    1e-8);
    }
    {
        double worst = 0.0;
        const double params[] = {-0.5, 0.0, 0.5, 1.5, 6.0};
        for (double a : params)
            for (double b : params)
                for (int n = 0; n <= 10; ++n)
                    for (int k = 0; k <= 20; ++k) {
                        // The terminating sum alternates; conditioning decays
                        // toward x = -1, so the tight check stays on x >= 1/2.
                        const double x = 0.5 + 0.025 * k;
                        const JacobiParams jp{n, a, b};
                        const double lhs = jacobi_eval(jp, x);
                        const double front = std::exp(
                            log_gamma(n + a + 1.0) -
                            (log_gamma(double(n) + 1.0) + log_gamma(1.0 + a)));
                        const double rhs =
                            front *
                            hyp2f1_terminating(-n, a + b + n + 1.0, 1.0 + a,
                                               (1.0 - x) / 2.0);
                        worst = std::max(worst, std::fabs(lhs - rhs) /
                                                    (1.0 + std::fabs(rhs)));
                    }
        r.pass_fail("specfun_recurrence_vs_hypergeometric", worst <= 1e-10,
                    worst, 1e-10);
    }
    {
        const double g_half =
            std::fabs(std::exp(log_gamma(0.5)) - std::sqrt(std::acos(-1.0)));
        const double b23 = std::fabs(beta(2.0, 3.0) - 1.0 / 12.0);
        const double worst = std::max(g_half, b23);
        r.pass_fail("specfun_gamma_beta_spot_values", worst <= 1e-13, worst,
                    1e-13);
    }

    // --- model ----------------------------------------------------------
    {
        // The residual must depend on quantum numbers only through M = 2n+D:
        // compare (n_r, ell, dim) groupings with equal M at random energies.
        ModelParams p;
        p.alpha = 1e-3;
        const QuantumNumbers qa = QuantumNumbers::of(1, 0, 3); // n = 3, M = 9
        const QuantumNumbers qb = QuantumNumbers::of(0, 1, 5); // n = 2, M = 9
        const QuantumNumbers qc = QuantumNumbers::of(0, 0, 7); // n = 1, M = 9
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double e = dist(rng) * p.mu;
            const double ha = residual_unsquared(e, p, qa);
            const double hb = residual_unsquared(e, p, qb);
            const double hc = residual_unsquared(e, p, qc);
            worst = std::max({worst, std::fabs(ha - hb), std::fabs(ha - hc)});
        }
        r.pass_fail("model_m_index_invariance", worst == 0.0, worst, 0.0);
    }

    // --- spectrum on the reference grid ---------------------------------
    const std::vector<SolvedCell> cells = solve_reference_grid();
    {
        r.pass_fail("spectrum_reference_grid_solved", cells.size() == 60,
                    double(cells.size()), 60.0);
    }
    {
        bool all_bit_identical = true;
        for (const SolvedCell& c : cells) {
            for (const SolvedCell& d : cells) {
                if (d.ref.alpha == c.ref.alpha && d.ref.dim == c.ref.dim + 2 &&
                    d.ref.n == c.ref.n - 1 && d.pt.energy != c.pt.energy)
                    all_bit_identical = false;
            }
        }
        r.pass_fail("spectrum_degeneracy_bit_identical", all_bit_identical,
                    all_bit_identical ? 0.0 : 1.0, 0.0);
    }
    {
        bool all_positive = true;
        for (const SolvedCell& c : cells)
            all_positive = all_positive && c.pt.energy > 0.0;
        r.pass_fail("spectrum_roots_positive", all_positive,
                    all_positive ? 1.0 : 0.0, 1.0);
    }
    {
        // Small-range limit: E/alpha^2 approaches the closed-form limit with
        // an error that shrinks linearly in alpha.
        double worst = 0.0;
        ModelParams p;
        for (double alpha : {1e-4, 1e-5}) {
            p.alpha = alpha;
            for (int m = 5; m <= 15; m += 2) {
                const double u = limiting_energy(m, p) / (alpha * alpha);
                const QuantumNumbers q = QuantumNumbers::of(0, 0, m - 2);
                const double e = solve_level(p, q).energy;
                const double rel = std::fabs(e / (alpha * alpha) - u) / u;
                worst = std::max(worst, rel / (100.0 * alpha));
            }
        }
        r.pass_fail("spectrum_limiting_law", worst <= 1.0, worst, 1.0);
    }

    // --- wavefunctions on the reference grid ----------------------------
    {
        // Discrete second-order check of the transformed radial equation on
        // every solved cell, sampled at x-step 30/(eps*80000) ~ 6e-5.  The
        // discretization error of the check shrinks linearly in the step
        // (the half-integer kappa of even dimensions puts an x^(kappa-3)
        // kink in the fourth derivative at the origin); this step keeps it
        // near 3.5e-7 on the worst cell.
        double worst = 0.0;
        for (const SolvedCell& c : cells) {
            GridSpec spec;
            spec.count = 80000;
            spec.spacing = GridSpec::Spacing::linear;
            const RadialFunction rf = sample(c.pt, spec);
            worst = std::max(worst, ode_residual(rf));
        }
        r.pass_fail("wavefunction_ode_residual", worst <= 1e-6, worst, 1e-6);
    }
    {
        // Closed-form lower component against central differences of F.
        double worst = 0.0;
        for (const SolvedCell& c : cells) {
            const double hr = 1e-6 / c.p.alpha;
            const double denom = c.p.mu + c.pt.energy - c.p.c1;
            const double r_char = 1.0 / (c.pt.eps * c.p.alpha);
            double gmax = 0.0, dmax = 0.0;
            for (int k = 1; k <= 40; ++k) {
                const double rr = 0.2 * r_char * k;
                const double g = lower_G(rr, c.pt, 1.0);
                const double fd =
                    ((upper_shape(rr + hr, c.pt) - upper_shape(rr - hr, c.pt)) /
                         (2.0 * hr) +
                     c.q.kappa() * upper_shape(rr, c.pt) / rr) /
                    denom;
                gmax = std::max(gmax, std::fabs(g));
                dmax = std::max(dmax, std::fabs(g - fd));
            }
            worst = std::max(worst, dmax / gmax);
        }
        r.pass_fail("wavefunction_lower_component_fd", worst <= 1e-6, worst,
                    1e-6);
    }
    {
        // Series vs quadrature normalization, including a synthetic deeper
        // level with three radial nodes.
        double worst = 0.0;
        for (const SolvedCell& c : cells) {
            const double cs = norm_constant_series(c.pt);
            const double cq = norm_constant_quadrature(c.pt);
            worst = std::max(worst, std::fabs(cs - cq) / cq);
        }
        ModelParams p;
        p.alpha = 1e-4;
        const SpectralPoint deep = solve_level(p, QuantumNumbers::of(3, 0, 3));
        const double cs = norm_constant_series(deep);
        const double cq = norm_constant_quadrature(deep);
        worst = std::max(worst, std::fabs(cs - cq) / cq);
        r.pass_fail("wavefunction_norm_series_vs_quadrature", worst <= 1e-8,
                    worst, 1e-8);
    }
    {
        double worst = 0.0;
        for (const SolvedCell& c : cells) {
            if (c.q.n_r != 0)
                continue;
            const double cs = norm_constant_series(c.pt);
            const double cg = norm_constant_ground(c.pt);
            worst = std::max(worst, std::fabs(cs - cg) / cg);
        }
        r.pass_fail("wavefunction_ground_state_norm_identity", worst <= 5e-15,
                    worst, 5e-15);
    }
    {
        bool all_match = true;
        double worst_trap = 0.0;
        for (const SolvedCell& c : cells) {
            GridSpec spec; // default hybrid, 4096 samples
            const RadialFunction rf = sample(c.pt, spec);
            if (count_nodes(rf) != c.q.n_r)
                all_match = false;
            worst_trap =
                std::max(worst_trap, std::fabs(trapezoid_norm(rf) - 1.0));
        }
        r.pass_fail("wavefunction_node_counts", all_match,
                    all_match ? 0.0 : 1.0, 0.0);
        r.pass_fail("wavefunction_trapezoid_norm", worst_trap <= 1e-3,
                    worst_trap, 1e-3);
    }
    {
        // Leading power at the origin and decay rate in the tail, read off
        // log-log / log-linear slopes.
        double worst_origin = 0.0, worst_tail = 0.0;
        for (const SolvedCell& c : cells) {
            GridSpec spec;
            const RadialFunction rf = sample(c.pt, spec);
            const double slope =
                std::log(std::fabs(rf.F[3]) / std::fabs(rf.F[1])) /
                std::log(rf.r[3] / rf.r[1]);
            worst_origin = std::max(
                worst_origin, std::fabs(slope - (c.q.kappa() + 1.0)) /
                                  (c.q.kappa() + 1.0));

            GridSpec tail_spec;
            tail_spec.r_max = 30.0 / c.p.alpha;
            tail_spec.count = 2000;
            tail_spec.spacing = GridSpec::Spacing::linear;
            const RadialFunction tf = sample(c.pt, tail_spec);
            const std::size_t last = tf.r.size() - 1;
            const std::size_t tenth = tf.r.size() / 10;
            const double decay =
                -std::log(std::fabs(tf.F[last]) / std::fabs(tf.F[last - tenth])) /
                (tf.r[last] - tf.r[last - tenth]);
            const double expected = c.pt.eps * c.p.alpha;
            worst_tail = std::max(worst_tail,
                                  std::fabs(decay - expected) / expected);
        }
        r.pass_fail("wavefunction_origin_power_slope", worst_origin <= 0.02,
                    worst_origin, 0.02);
        r.pass_fail("wavefunction_tail_decay_slope", worst_tail <= 0.02,
                    worst_tail, 0.02);
    }

    // --- oracle ----------------------------------------------------------
    if (args.fast) {
        r.skip("oracle_agreement");
        r.skip("oracle_convergence_order");
        r.skip("oracle_ladder");
        r.skip("oracle_centrifugal_gap_shrinks");
        r.skip("oracle_eigenvector_nodes");
    } else {
        {
            // Representative cells spanning dims, levels and ranges.
            double worst = 0.0;
            const std::vector<std::array<double, 3>> sel = {
                {3, 1, 1e-4}, {5, 1, 1e-2}, {3, 2, 1e-2},
                {4, 3, 5e-3}, {5, 5, 1e-3}};
            for (const auto& s : sel) {
                for (const SolvedCell& c : cells) {
                    if (c.ref.dim == int(s[0]) && c.ref.n == int(s[1]) &&
                        c.ref.alpha == s[2]) {
                        const double eo = self_consistent_energy(c.p, c.q);
                        worst = std::max(worst, std::fabs(eo - c.pt.energy) /
                                                    c.pt.energy);
                    }
                }
            }
            r.pass_fail("oracle_agreement", worst <= 1e-6, worst, 1e-6);
        }
        {
            ModelParams p;
            p.alpha = 1e-4;
            const QuantumNumbers q = QuantumNumbers::of(0, 0, 3);
            OracleConfig cfg;
            cfg.x_max = 40.0;
            cfg.points = 1000;
            cfg.refine_levels = 2;
            const OracleResult res = self_consistent_energy_details(p, q, cfg);
            const double exact = solve_level(p, q).energy;
            const double e0 = std::fabs(res.level_energies[0] - exact);
            const double e1 = std::fabs(res.level_energies[1] - exact);
            const double order = std::log2(e0 / e1);
            r.pass_fail("oracle_convergence_order",
                        order >= 1.8 && order <= 2.2, order, 2.0);
        }
        {
            // Generalized Poschl-Teller ladder: eps_n = eps_0 - 2 n.
            const TridiagonalOperator op =
                build_operator(2.0, 72.0, 1e-6, 40.0, 9000);
            const std::vector<double> ev = lowest_eigenvalues(op, 2);
            const double worst = std::max(std::fabs(ev[0] + 36.0),
                                          std::fabs(ev[1] + 16.0));
            r.pass_fail("oracle_ladder", worst <= 1e-3, worst, 1e-3);
        }
        {
            // The sinh-form centrifugal barrier is an approximation; its
            // energy gap against the exact 1/r^2 barrier shrinks with alpha.
            OracleConfig cfg;
            cfg.x_max = 40.0;
            cfg.points = 2000;
            cfg.refine_levels = 1;
            ModelParams p;
            const QuantumNumbers q = QuantumNumbers::of(0, 0, 3);
            p.alpha = 1e-2;
            const ApproximationGap coarse = approximation_gap(p, q, cfg);
            p.alpha = 5e-3;
            const ApproximationGap fine = approximation_gap(p, q, cfg);
            const double ratio = std::fabs(fine.gap) / std::fabs(coarse.gap);
            const bool ok = std::fabs(coarse.gap) > 0.0 && ratio < 1.0;
            r.pass_fail("oracle_centrifugal_gap_shrinks", ok, ratio, 1.0);
        }
        {
            bool ok = true;
            const TridiagonalOperator op =
                build_operator(2.0, 72.0, 1e-6, 40.0, 4000);
            const std::vector<double> ev = lowest_eigenvalues(op, 3);
            for (int j = 0; j < 3; ++j) {
                const std::vector<double> v = eigenvector(op, ev[j]);
                int nodes = 0;
                double lastnz = 0.0;
                for (double u : v) {
                    if (std::fabs(u) < 1e-9)
                        continue;
                    if (lastnz != 0.0 && (u > 0.0) != (lastnz > 0.0))
                        ++nodes;
                    lastnz = u;
                }
                ok = ok && nodes == j;
            }
            r.pass_fail("oracle_eigenvector_nodes", ok, ok ? 0.0 : 1.0, 0.0);
        }
    }

    std::fputs(r.finish().c_str(), stdout);
    return r.failures() == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relativistic bound states of a smooth-well radial problem: "
                 "closed-form spectra and wavefunctions with an independent "
                 "finite-difference cross-check"};
    app.require_subcommand(1);

    SpectrumArgs sa;
    CLI::App* sp = app.add_subcommand(
        "spectrum", "Solve the level condition over a (dim, n, alpha) grid");
    sp->add_option("--dim", sa.dims, "Spatial dimension (repeatable)");
    sp->add_option("--n-max", sa.n_max, "Largest principal quantum number");
    sp->add_option("--alpha", sa.alphas, "Range parameter (repeatable)");
    sp->add_option("--mu", sa.mu, "Mass");
    sp->add_option("--v0", sa.v0, "Vector well depth");
    sp->add_option("--s0", sa.s0, "Scalar well depth");
    sp->add_option("--c1", sa.c1, "Spin-symmetry constant");
    sp->add_option("--format", sa.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sp->add_option("--out", sa.out, "Output path (default stdout)");

    WavefunctionArgs wa;
    CLI::App* wf = app.add_subcommand(
        "wavefunction", "Sample the normalized two-component radial solution");
    wf->add_option("--dim", wa.dim, "Spatial dimension");
    wf->add_option("--nr", wa.nr, "Radial node count");
    wf->add_option("--ell", wa.ell, "Orbital quantum number");
    wf->add_option("--alpha", wa.alpha, "Range parameter");
    wf->add_option("--mu", wa.mu, "Mass");
    wf->add_option("--v0", wa.v0, "Vector well depth");
    wf->add_option("--s0", wa.s0, "Scalar well depth");
    wf->add_option("--c1", wa.c1, "Spin-symmetry constant");
    wf->add_option("--samples", wa.samples, "Number of radial samples");
    wf->add_option("--rmax", wa.rmax,
                   "Outer radius (default 30 decay lengths)");
    wf->add_option("--grid", wa.grid, "Grid spacing")
        ->check(CLI::IsMember({"hybrid", "linear", "log"}));
    wf->add_option("--norm", wa.norm, "Normalization method")
        ->check(CLI::IsMember({"series", "quadrature"}));
    wf->add_option("--format", wa.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    wf->add_option("--out", wa.out, "Output path (default stdout)");

    Table1Args ta;
    CLI::App* t1 = app.add_subcommand(
        "table1", "Compare computed levels against the published table");
    t1->add_option("--out", ta.out, "Output path (default stdout)");
    t1->add_option("--oracle", ta.oracle,
                   "Also run the finite-difference solver per cell")
        ->check(CLI::IsMember({"on", "off"}));
    t1->add_flag("--dump", ta.dump, "Emit the embedded reference CSV and exit");

    ValidateArgs va;
    CLI::App* vd = app.add_subcommand(
        "validate", "Run the invariant suite and print one line per property");
    vd->add_flag("--fast", va.fast, "Skip the finite-difference cross-checks");
    vd->add_option("--seed", va.seed, "Seed for randomized property sampling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sp->parsed())
            return run_spectrum(sa);
        if (wf->parsed())
            return run_wavefunction(wa);
        if (t1->parsed())
            return run_table1(ta);
        return run_validate(va);
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const NoBoundState& e) {
        std::fprintf(stderr, "no bound state: %s\n", e.what());
        return 1;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 1;
    }
}
