// Copyright 2026 The LOSR Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "CLI11.hpp"
#include "losr/boxes/box.h"
#include "losr/boxes/functional.h"
#include "losr/boxes/local_polytope.h"
#include "losr/monotones/measurement.h"
#include "losr/monotones/yield.h"
#include "losr/preorder/factor.h"
#include "losr/preorder/verdict.h"
#include "losr/quantum/born.h"
#include "losr/quantum/catalog.h"
#include "losr/quantum/linalg.h"
#include "losr/quantum/random.h"
#include "losr/quantum/schmidt.h"
#include "losr/quantum/state_io.h"
#include "losr/selftest/closure.h"
#include "losr/selftest/flag.h"
#include "losr/tolerances.h"

namespace losr {

namespace {

struct Globals {
    double eps_norm = Tolerances{}.eps_norm;
    double tau_rank = Tolerances{}.tau_rank;
    double eps_match = Tolerances{}.eps_match;
    std::uint64_t seed = 1;
    int restarts = kDefaultRestarts;
    bool long_form = false;
};

// Argument of "name(arg)", or nullopt when `spec` has another shape.
std::optional<std::string> call_argument(const std::string &spec, const std::string &name) {
    if (spec.size() < name.size() + 2 || spec.compare(0, name.size() + 1, name + "(") != 0 || spec.back() != ')') {
        return std::nullopt;
    }
    return spec.substr(name.size() + 1, spec.size() - name.size() - 2);
}

double parse_number(const std::string &text, const std::string &what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(v)) {
        throw std::invalid_argument("bad number '" + text + "' in " + what);
    }
    return v;
}

std::ifstream open_file(const std::string &path, const std::string &what) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("'" + path + "' is neither a catalog " + what + " nor a readable file");
    }
    return in;
}

AnyState resolve_state(const std::string &spec) {
    if (spec == "phi_plus") {
        return catalog::phi_plus();
    }
    if (spec == "ghz") {
        return catalog::ghz();
    }
    if (spec == "two_bell") {
        return catalog::two_bell();
    }
    if (spec == "chiral") {
        return catalog::chiral();
    }
    if (spec == "product") {
        return catalog::product();
    }
    if (auto arg = call_argument(spec, "partial")) {
        if (*arg == "best") {
            return catalog::partial(catalog::hardy_optimal_angle());
        }
        return catalog::partial(parse_number(*arg, spec));
    }
    if (auto arg = call_argument(spec, "max")) {
        double d = parse_number(*arg, spec);
        if (d != std::floor(d) || d < 1 || d > 64) {
            throw std::invalid_argument("max(d) needs an integer 1 <= d <= 64");
        }
        return catalog::max_entangled(static_cast<int>(d));
    }
    if (auto arg = call_argument(spec, "product")) {
        double n = parse_number(*arg, spec);
        if (n != std::floor(n) || n < 1 || n > 8) {
            throw std::invalid_argument("product(n) needs an integer 1 <= n <= 8");
        }
        return catalog::product(static_cast<int>(n));
    }
    std::ifstream in = open_file(spec, "state");
    return read_state(in);
}

PureState resolve_pure(const std::string &spec) {
    AnyState s = resolve_state(spec);
    if (const auto *psi = std::get_if<PureState>(&s)) {
        return *psi;
    }
    throw std::invalid_argument("'" + spec + "' is a density matrix; this command needs a pure state");
}

Box mermin_box() {
    MeasurementFamily fam = pauli_family({{'X', 'Y'}, {'X', 'Y'}, {'X', 'Y'}});
    return born_box(catalog::ghz(), fam.to_local_measurements());
}

Box resolve_box(const std::string &spec) {
    if (spec == "pr_box") {
        return pr_box();
    }
    if (spec == "tsirelson_box") {
        return tsirelson_box();
    }
    if (spec == "uniform_box") {
        return uniform_box(Scenario::uniform(2, 2, 2));
    }
    if (spec == "mermin_box") {
        return mermin_box();
    }
    std::ifstream in = open_file(spec, "box");
    return read_box(in);
}

Bipartition default_bipartition(const PureState &psi, const std::string &text) {
    if (!text.empty()) {
        Bipartition beta = Bipartition::parse(text);
        if (beta.num_parties() != psi.num_parties()) {
            throw std::invalid_argument("bipartition " + text + " does not match the state's party count");
        }
        return beta;
    }
    if (psi.num_parties() != 2) {
        throw std::invalid_argument("a bipartition is required for states with more than two parties");
    }
    return Bipartition({0}, 2);
}

std::string join(const std::vector<double> &v) {
    std::ostringstream out;
    out << std::setprecision(12);
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? " " : "") << v[i];
    }
    return out.str();
}

// Collects named checks for the demos.
class Checks {
   public:
    explicit Checks(std::ostream &out) : out_(out) {}
    void expect(bool ok, const std::string &name) {
        out_ << "check " << name << ' ' << (ok ? "ok" : "FAILED") << '\n';
        failed_ = failed_ || !ok;
    }
    int exit_code() const {
        return failed_ ? kExitAssertion : kExitOk;
    }

   private:
    std::ostream &out_;
    bool failed_ = false;
};

int cmd_schmidt(const std::string &state, const std::string &cut, std::ostream &out) {
    PureState psi = resolve_pure(state);
    out << schmidt_spectrum(psi, default_bipartition(psi, cut)).to_string() << '\n';
    return kExitOk;
}

ConversionVerdict compare_any(const PureState &a, const PureState &b) {
    if (a.num_parties() == 2 && b.num_parties() == 2) {
        return compare_bipartite(a, b);
    }
    return multipartite_check(a, b);
}

int cmd_compare(const std::string &s1, const std::string &s2, const Globals &g, std::ostream &out) {
    ConversionVerdict v = compare_any(resolve_pure(s1), resolve_pure(s2));
    if (g.long_form) {
        out << "# first line: direction and reason; then each direction and the witnesses\n";
    }
    out << v.to_string();
    return kExitOk;
}

int cmd_multi_check(const std::string &s1, const std::string &s2, std::ostream &out) {
    out << multipartite_check(resolve_pure(s1), resolve_pure(s2)).to_string();
    return kExitOk;
}

int cmd_factor(const std::string &s1, const std::string &s2, const std::string &cut, const Globals &g,
               std::ostream &out) {
    PureState psi = resolve_pure(s1);
    PureState phi = resolve_pure(s2);
    Bipartition beta_psi = default_bipartition(psi, cut);
    Bipartition beta_phi = default_bipartition(phi, cut);
    FactorizationResult r =
        factor_spectrum(schmidt_spectrum(psi, beta_psi), schmidt_spectrum(phi, beta_phi), g.eps_match);
    if (r.found) {
        out << "found " << r.lambda_zeta->to_string() << '\n';
    } else {
        out << "not_found " << to_string(*r.failure) << '\n';
    }
    out << "residual " << std::setprecision(6) << r.residual << (r.marginal ? " marginal" : "") << '\n';
    return kExitOk;
}

int cmd_box_local(const std::string &spec, const Globals &g, std::ostream &out) {
    Box box = resolve_box(spec);
    LocalMembership m = local_membership(box);
    out << std::setprecision(12);
    if (const auto *local = std::get_if<LocalCertificate>(&m)) {
        out << "Local " << local->min_weight << ' ' << local->reconstruction_error << '\n';
        out << "weights " << join(local->weights) << '\n';
        out << "verified " << (verify_certificate(*local, box) ? "yes" : "no") << '\n';
    } else {
        const auto &cert = std::get<NonlocalCertificate>(m);
        out << "Nonlocal " << cert.local_bound << ' ' << cert.box_value << ' ' << cert.margin() << '\n';
        out << "coefficients " << join(cert.coefficients) << '\n';
        out << "verified " << (verify_certificate(cert, box) ? "yes" : "no") << '\n';
    }
    if (g.long_form) {
        out << "# Local: min weight over deterministic vertices, reconstruction error\n";
        out << "# Nonlocal: local bound of the separating functional, its value on the box, margin\n";
    }
    return kExitOk;
}

int cmd_box_eval(const std::string &spec, const std::string &name, double alpha, std::ostream &out) {
    Box box = resolve_box(spec);
    BellFunctional f = BellFunctional::from_name(name, alpha);
    out << std::setprecision(12) << evaluate(f, box) << '\n';
    if (!f.is_linear()) {
        out << "violation " << std::setprecision(6) << max_constraint_violation(f, box) << '\n';
    }
    return kExitOk;
}

int cmd_yield(const std::string &state, const std::string &name, double alpha, const Globals &g,
              std::ostream &out) {
    DensityMatrix rho = as_density(resolve_state(state));
    BellFunctional f = BellFunctional::from_name(name, alpha);
    YieldResult r = optimize_yield(rho, f, g.restarts, g.seed);
    if (g.long_form) {
        out << "# value restarts seed, then party setting polar azimuth\n";
    }
    out << r.to_string();
    return kExitOk;
}

int cmd_selftest_scan(const std::string &name, double alpha, const std::string &target_value,
                      const std::string &target, const std::vector<std::string> &candidates, double tol,
                      const Globals &g, std::ostream &out) {
    BellFunctional f = BellFunctional::from_name(name, alpha);
    std::vector<PureState> states;
    for (const auto &c : candidates) {
        states.push_back(resolve_pure(c));
    }
    ClosureScanReport r = closure_scan(f, parse_number(target_value, "target value"), resolve_pure(target), states,
                                       tol, g.restarts, g.seed);
    if (g.long_form) {
        out << "# conclusions hold for the listed candidates only\n";
    }
    out << r.to_string();
    return kExitOk;
}

int demo_anomaly(const Globals &g, std::ostream &out) {
    Checks checks(out);
    double theta = catalog::hardy_optimal_angle();
    PureState max = catalog::phi_plus();
    PureState part = catalog::partial(theta);
    BellFunctional hardy = BellFunctional::hardy();
    BellFunctional chsh = BellFunctional::chsh();
    double h_max = optimize_yield(max, hardy, g.restarts, g.seed).value;
    double h_part = optimize_yield(part, hardy, g.restarts, g.seed).value;
    double c_max = optimize_yield(max, chsh, g.restarts, g.seed).value;
    double c_part = optimize_yield(part, chsh, g.restarts, g.seed).value;
    ConversionVerdict v = compare_bipartite(max, part);
    out << std::setprecision(10);
    if (g.long_form) {
        out << "# the maximally entangled state wins on CHSH, the partially entangled one on Hardy\n";
    }
    out << "state hardy chsh\n";
    out << "phi_plus " << h_max << ' ' << c_max << '\n';
    out << "partial(" << theta << ") " << h_part << ' ' << c_part << '\n';
    out << "compare phi_plus partial " << to_string(v.direction) << ' ' << to_string(v.reason) << '\n';
    checks.expect(h_part > 0.05, "hardy_partial_positive");
    checks.expect(h_max < 1e-6, "hardy_phi_plus_zero");
    checks.expect(c_part < c_max, "chsh_ordering");
    checks.expect(v.direction == Direction::Incomparable, "incomparable");
    return checks.exit_code();
}

int demo_ghz_mermin(const Globals &g, std::ostream &out) {
    Checks checks(out);
    Box box = mermin_box();
    double score = evaluate(BellFunctional::mermin_ghz(), box);
    out << std::setprecision(12);
    out << "mermin_box score " << score << '\n';
    checks.expect(std::abs(score - 1.0) <= 1e-10, "mermin_parity");
    LocalMembership m = local_membership(box);
    const auto *cert = std::get_if<NonlocalCertificate>(&m);
    if (cert) {
        out << "mermin_box Nonlocal " << cert->local_bound << ' ' << cert->box_value << '\n';
    } else {
        out << "mermin_box Local\n";
    }
    checks.expect(cert != nullptr && verify_certificate(*cert, box), "mermin_nonlocal");
    double y = optimize_yield(catalog::ghz(), BellFunctional::mermin_ghz(), g.restarts, g.seed).value;
    out << "yield ghz mermin " << y << '\n';
    checks.expect(y >= 1.0 - 1e-6, "mermin_yield");
    for (const auto &cut : Bipartition::all(3)) {
        out << "schmidt " << cut.label() << " two_bell " << schmidt_spectrum(catalog::two_bell(), cut).to_string()
            << " ghz " << schmidt_spectrum(catalog::ghz(), cut).to_string() << '\n';
    }
    ConversionVerdict v = multipartite_check(catalog::two_bell(), catalog::ghz());
    out << "compare two_bell ghz " << to_string(v.direction) << '\n';
    out << "forward " << (v.forward.ruled_out ? to_string(v.forward.reason) : "ok") << '\n';
    out << "backward " << (v.backward.ruled_out ? to_string(v.backward.reason) : "ok") << '\n';
    checks.expect(v.direction == Direction::Incomparable, "two_bell_ghz_incomparable");
    return checks.exit_code();
}

Eigen::MatrixXcd pauli(char axis) {
    const auto &p = pauli_basis();
    return axis == 'X' ? p[1] : axis == 'Y' ? p[2] : axis == 'Z' ? p[3] : p[0];
}

int demo_flag_selftest(const Globals &g, std::ostream &out) {
    Checks checks(out);
    auto report = [&](const std::string &name, const FlagRoundtripReport &r) {
        out << "flag " << name << ' ' << std::setprecision(3) << r.forward_error << ' ' << r.backward_error << ' '
            << (r.shared_randomness_free ? "lo" : "losr") << ' ' << (r.passed ? "passed" : "failed") << '\n';
    };
    FlagConstruction uniform{catalog::phi_plus(), Eigen::MatrixXd::Constant(2, 2, 0.25), {pauli('I'), pauli('X')},
                             {pauli('I'), pauli('Z')}};
    FlagConstruction correlated{catalog::partial(M_PI / 8), Eigen::MatrixXd::Identity(2, 2) * 0.5,
                                {pauli('I'), pauli('Y')}, {pauli('X'), pauli('Z')}};
    if (g.long_form) {
        out << "# flag name forward_error backward_error channel_class result\n";
    }
    FlagRoundtripReport r1 = flag_roundtrip_check(uniform);
    report("phi_plus_uniform", r1);
    checks.expect(r1.passed && r1.shared_randomness_free, "uniform_roundtrip");
    FlagRoundtripReport r2 = flag_roundtrip_check(correlated);
    report("partial_correlated", r2);
    checks.expect(r2.passed && !r2.shared_randomness_free, "correlated_roundtrip");
    FlagRoundtripReport r3 = flag_roundtrip_check(uniform, {pauli('I'), pauli('Y')}, {pauli('I'), pauli('Z')});
    report("corrupted_undo", r3);
    checks.expect(!r3.passed, "corrupted_undo_rejected");

    ClosureScanReport scan =
        closure_scan(BellFunctional::chsh(), 2.0 * std::sqrt(2.0), catalog::phi_plus(),
                     {catalog::phi_plus(), catalog::partial(M_PI / 8), catalog::product()}, 1e-6, g.restarts, g.seed);
    out << scan.to_string();
    checks.expect(scan.condition_satisfied && scan.reachers() == std::vector<std::size_t>{0}, "chsh_scan");
    return checks.exit_code();
}

SchmidtSpectrum random_spectrum(int rank, Rng &rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> v(static_cast<std::size_t>(rank));
    double total = 0.0;
    for (double &x : v) {
        x = e(rng) + 0.05;
        total += x;
    }
    for (double &x : v) {
        x /= total;
    }
    return SchmidtSpectrum(v);
}

int demo_catalysis(const Globals &g, std::ostream &out) {
    Checks checks(out);
    Rng rng = make_rng(g.seed, 0xca7);
    std::uniform_int_distribution<int> rank4(1, 4);
    std::uniform_int_distribution<int> rank2(1, 2);
    constexpr int kTrials = 500;
    int convertible = 0;
    int counterexamples = 0;
    for (int t = 0; t < kTrials; ++t) {
        SchmidtSpectrum phi = random_spectrum(rank4(rng), rng);
        SchmidtSpectrum psi = random_spectrum(rank4(rng), rng);
        if (t % 2 == 0) {
            // Convertible by construction, sometimes nudged off.
            phi = random_spectrum(rank2(rng), rng);
            psi = tensor(phi, random_spectrum(rank2(rng), rng));
            if (t % 4 == 2) {
                auto v = psi.values();
                v.front() += 1e-3;
                v.back() -= 1e-3;
                if (v.back() > 0) {
                    psi = SchmidtSpectrum(v);
                }
            }
        }
        SchmidtSpectrum chi = random_spectrum(rank4(rng), rng);
        PureState a = schmidt_form_state(psi);
        PureState b = schmidt_form_state(phi);
        bool plain = compare_bipartite(a, b).allows_forward();
        bool catalytic = catalytic_convertible(a, b, schmidt_form_state(chi));
        convertible += plain ? 1 : 0;
        counterexamples += plain != catalytic ? 1 : 0;
    }
    out << "trials " << kTrials << " convertible " << convertible << " counterexamples " << counterexamples << '\n';
    checks.expect(counterexamples == 0, "no_catalysis");
    return checks.exit_code();
}

int cmd_demo(const std::string &name, const Globals &g, std::ostream &out) {
    if (name == "anomaly") {
        return demo_anomaly(g, out);
    }
    if (name == "ghz_mermin") {
        return demo_ghz_mermin(g, out);
    }
    if (name == "flag_selftest") {
        return demo_flag_selftest(g, out);
    }
    if (name == "catalysis") {
        return demo_catalysis(g, out);
    }
    throw std::invalid_argument("unknown demo '" + name + "'");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"LOSR entanglement toolkit", "losr"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--eps-norm", g.eps_norm, "Normalization tolerance")->check(CLI::PositiveNumber);
    app.add_option("--tau-rank", g.tau_rank, "Schmidt rank threshold")->check(CLI::PositiveNumber);
    app.add_option("--eps-match", g.eps_match, "Relative spectrum matching tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Optimizer seed");
    app.add_option("--restarts", g.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
    app.add_flag("--long", g.long_form, "Add explanatory comment lines");

    std::string s1, s2, cut, name, box, target_value;
    std::vector<std::string> candidates;
    double alpha = 0.0;
    double tol = 1e-6;

    auto *schmidt = app.add_subcommand("schmidt", "Schmidt spectrum across a bipartition");
    schmidt->add_option("state", s1)->required();
    schmidt->add_option("bipartition", cut);

    auto *compare = app.add_subcommand("compare", "LOSR conversion verdict between two pure states");
    compare->add_option("state1", s1)->required();
    compare->add_option("state2", s2)->required();

    auto *factor = app.add_subcommand("factor", "Factor one spectrum by another");
    factor->add_option("state1", s1)->required();
    factor->add_option("state2", s2)->required();
    factor->add_option("bipartition", cut);

    auto *multi = app.add_subcommand("multi-check", "Multipartite necessary-condition check");
    multi->add_option("state1", s1)->required();
    multi->add_option("state2", s2)->required();

    auto *box_local = app.add_subcommand("box-local", "Local polytope membership with certificate");
    box_local->add_option("box", box)->required();

    auto *box_eval = app.add_subcommand("box-eval", "Evaluate a Bell functional on a box");
    box_eval->add_option("box", box)->required();
    box_eval->add_option("functional", name)->required();
    box_eval->add_option("--alpha", alpha, "Tilt of the tilted CHSH functional");

    auto *yield = app.add_subcommand("yield", "Optimize a Bell functional over local measurements");
    yield->add_option("state", s1)->required();
    yield->add_option("functional", name)->required();
    yield->add_option("--alpha", alpha, "Tilt of the tilted CHSH functional");

    auto *scan = app.add_subcommand("selftest-scan", "Upward-closure scan over candidate states");
    scan->add_option("functional", name)->required();
    scan->add_option("target_value", target_value)->required();
    scan->add_option("target_state", s1)->required();
    scan->add_option("candidates", candidates)->required();
    scan->add_option("--alpha", alpha, "Tilt of the tilted CHSH functional");
    scan->add_option("--tol", tol, "One-sided reacher tolerance")->check(CLI::NonNegativeNumber);

    auto *demo = app.add_subcommand("demo", "Worked examples with built-in checks");
    demo->add_option("name", name, "anomaly, ghz_mermin, flag_selftest or catalysis")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    Tolerances saved = tolerances();
    tolerances() = Tolerances{g.eps_norm, g.tau_rank, g.eps_match};
    int code = kExitOk;
    try {
        if (schmidt->parsed()) {
            code = cmd_schmidt(s1, cut, out);
        } else if (compare->parsed()) {
            code = cmd_compare(s1, s2, g, out);
        } else if (factor->parsed()) {
            code = cmd_factor(s1, s2, cut, g, out);
        } else if (multi->parsed()) {
            code = cmd_multi_check(s1, s2, out);
        } else if (box_local->parsed()) {
            code = cmd_box_local(box, g, out);
        } else if (box_eval->parsed()) {
            code = cmd_box_eval(box, name, alpha, out);
        } else if (yield->parsed()) {
            code = cmd_yield(s1, name, alpha, g, out);
        } else if (scan->parsed()) {
            code = cmd_selftest_scan(name, alpha, target_value, s1, candidates, tol, g, out);
        } else if (demo->parsed()) {
            code = cmd_demo(name, g, out);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        code = kExitInput;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        code = kExitAssertion;
    }
    tolerances() = saved;
    return code;
}

}  // namespace losr
