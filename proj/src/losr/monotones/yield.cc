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

#include "losr/monotones/yield.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <gsl/gsl_multimin.h>

#include "losr/monotones/correlation.h"
#include "losr/quantum/born.h"
#include "losr/quantum/index.h"
#include "losr/quantum/random.h"

namespace losr {

namespace {

constexpr int kMaxSweeps = 500;
constexpr double kSweepTolerance = 1e-10;
constexpr int kPolishIterations = 400;

// Linear surrogate sum_e weight_e p_e that the see-saw maximizes.
struct Surrogate {
    std::vector<double> objective;
    std::vector<std::size_t> penalized;

    std::vector<double> weights(double mu) const {
        std::vector<double> w = objective;
        for (std::size_t e : penalized) {
            w[e] -= mu;
        }
        return w;
    }
};

Surrogate surrogate_of(const BellFunctional &f) {
    Surrogate s;
    if (f.is_linear()) {
        s.objective = f.coefficients;
    } else {
        s.objective.assign(f.scenario.table_size(), 0.0);
        s.objective[f.objective] = 1.0;
        s.penalized = f.zero_constraints;
    }
    return s;
}

double dot(const std::vector<double> &w, const std::vector<double> &table) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += w[i] * table[i];
    }
    return s;
}

class Problem {
   public:
    Problem(const CorrelationTensor &tensor, const Scenario &scenario) : tensor_(tensor), scenario_(scenario) {
        std::size_t rows = scenario.num_setting_tuples();
        std::size_t cols = scenario.num_outcome_tuples();
        row_settings_.reserve(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            row_settings_.push_back(index::digits(r, scenario.settings));
        }
        cols_ = cols;
    }

    double value(const std::vector<double> &w, const BlochVectors &v) const {
        return dot(w, tensor_.table(scenario_, v));
    }

    // One exact coordinate step: all settings of `party` at once.
    void update_party(std::size_t party, const std::vector<double> &w, BlochVectors &v) const {
        std::size_t settings = v[party].size();
        BlochVectors probe = v;
        for (auto &n : probe[party]) {
            n.setZero();
        }
        std::vector<double> base = tensor_.table(scenario_, probe);
        std::vector<Eigen::Vector3d> b(settings, Eigen::Vector3d::Zero());
        for (int axis = 0; axis < 3; ++axis) {
            for (auto &n : probe[party]) {
                n = Eigen::Vector3d::Unit(axis);
            }
            std::vector<double> t = tensor_.table(scenario_, probe);
            for (std::size_t e = 0; e < t.size(); ++e) {
                std::size_t s = static_cast<std::size_t>(row_settings_[e / cols_][party]);
                b[s](axis) += w[e] * (t[e] - base[e]);
            }
        }
        for (std::size_t s = 0; s < settings; ++s) {
            double norm = b[s].norm();
            if (norm > 1e-300) {
                v[party][s] = b[s] / norm;
            }
        }
    }

    double see_saw(const std::vector<double> &w, BlochVectors &v) const {
        double current = value(w, v);
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            for (std::size_t k = 0; k < v.size(); ++k) {
                update_party(k, w, v);
            }
            double next = value(w, v);
            double gain = next - current;
            current = next;
            if (gain < kSweepTolerance * std::max(1.0, std::abs(current))) {
                break;
            }
        }
        return current;
    }

    const Scenario &scenario() const {
        return scenario_;
    }
    const CorrelationTensor &tensor() const {
        return tensor_;
    }

   private:
    const CorrelationTensor &tensor_;
    const Scenario &scenario_;
    std::vector<std::vector<int>> row_settings_;
    std::size_t cols_ = 0;
};

std::vector<double> pack(const BlochVectors &v) {
    std::vector<double> x;
    for (const auto &party : v) {
        for (const auto &n : party) {
            BlochAngles a = BlochAngles::from_vector(n);
            x.push_back(a.polar);
            x.push_back(a.azimuth);
        }
    }
    return x;
}

void unpack(const double *x, BlochVectors &v) {
    std::size_t i = 0;
    for (auto &party : v) {
        for (auto &n : party) {
            n = BlochAngles{x[i], x[i + 1]}.vector();
            i += 2;
        }
    }
}

struct PolishContext {
    const Problem *problem;
    const std::vector<double> *weights;
    BlochVectors scratch;
};

double polish_objective(const gsl_vector *x, void *params) {
    auto *ctx = static_cast<PolishContext *>(params);
    unpack(x->data, ctx->scratch);
    return -ctx->problem->value(*ctx->weights, ctx->scratch);
}

// Gradient-free refinement in angle space; keeps the input unless it
// strictly improves the surrogate.
void polish(const Problem &problem, const std::vector<double> &w, BlochVectors &v) {
    std::vector<double> start = pack(v);
    std::size_t dim = start.size();
    PolishContext ctx{&problem, &w, v};
    gsl_multimin_function fn{&polish_objective, dim, &ctx};
    gsl_vector *x = gsl_vector_alloc(dim);
    gsl_vector *step = gsl_vector_alloc(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        gsl_vector_set(x, i, start[i]);
        gsl_vector_set(step, i, 1e-3);
    }
    gsl_multimin_fminimizer *m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim);
    gsl_multimin_fminimizer_set(m, &fn, x, step);
    for (int it = 0; it < kPolishIterations; ++it) {
        if (gsl_multimin_fminimizer_iterate(m) != 0) {
            break;
        }
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), 1e-12) == GSL_SUCCESS) {
            break;
        }
    }
    double before = problem.value(w, v);
    if (-m->fval > before) {
        unpack(m->x->data, v);
        if (problem.value(w, v) < before) {
            unpack(start.data(), v);
        }
    }
    gsl_multimin_fminimizer_free(m);
    gsl_vector_free(step);
    gsl_vector_free(x);
}

// Two-qubit Hardy refinement. For a two-outcome Alice projector with Bloch
// vector n and sign s, Bob's conditional operator is (c_0 I + c . sigma) / 4
// with c_nu = R_0nu + s sum_i n_i R_inu, so the Bob projector minimizing a
// zero-probability entry is along -+c/|c| in closed form. Fixing Alice's
// second setting therefore determines the other three measurements; the
// polish searches over those two angles only.
Eigen::Vector4d bob_conditional(const std::vector<double> &r, const Eigen::Vector3d &n, double sign) {
    Eigen::Vector4d c;
    for (int nu = 0; nu < 4; ++nu) {
        c(nu) = r[static_cast<std::size_t>(nu)];
        for (int i = 0; i < 3; ++i) {
            c(nu) += sign * n(i) * r[static_cast<std::size_t>((i + 1) * 4 + nu)];
        }
    }
    return c;
}

Eigen::Vector4d alice_conditional(const std::vector<double> &r, const Eigen::Vector3d &m, double sign) {
    Eigen::Vector4d d;
    for (int mu = 0; mu < 4; ++mu) {
        d(mu) = r[static_cast<std::size_t>(mu * 4)];
        for (int j = 0; j < 3; ++j) {
            d(mu) += sign * m(j) * r[static_cast<std::size_t>(mu * 4 + j + 1)];
        }
    }
    return d;
}

Eigen::Vector3d direction(const Eigen::Vector4d &c, double sign, const Eigen::Vector3d &fallback) {
    Eigen::Vector3d v = c.tail<3>();
    double norm = v.norm();
    return norm > 1e-300 ? Eigen::Vector3d(sign * v / norm) : fallback;
}

// Settings: Alice x=0 is v[0][0], x=1 is v[0][1]; Bob likewise. The zero
// entries are p(00|01), p(00|10), p(11|11).
BlochVectors hardy_complete(const std::vector<double> &r, const Eigen::Vector3d &a1, const BlochVectors &start) {
    BlochVectors v = start;
    v[0][1] = a1;
    // p(11|11) = (c0 - b1 . c) / 4 with c from Alice outcome 1.
    v[1][1] = direction(bob_conditional(r, a1, -1.0), 1.0, start[1][1]);
    // p(00|01) = (d0 + a0 . d) / 4 with d from Bob's b1, outcome 0.
    v[0][0] = direction(alice_conditional(r, v[1][1], 1.0), -1.0, start[0][0]);
    // p(00|10) = (c0 + b0 . c) / 4 with c from Alice's a1, outcome 0.
    v[1][0] = direction(bob_conditional(r, a1, 1.0), -1.0, start[1][0]);
    return v;
}

struct HardyPolishContext {
    const Problem *problem;
    const std::vector<double> *weights;
    const BlochVectors *start;
};

double hardy_polish_objective(const gsl_vector *x, void *params) {
    auto *ctx = static_cast<HardyPolishContext *>(params);
    Eigen::Vector3d a1 = BlochAngles{gsl_vector_get(x, 0), gsl_vector_get(x, 1)}.vector();
    BlochVectors v = hardy_complete(ctx->problem->tensor().coefficients(), a1, *ctx->start);
    return -ctx->problem->value(*ctx->weights, v);
}

// True for the two-party layout with objective p(00|00) and zero entries
// p(00|01), p(00|10), p(11|11).
bool has_hardy_layout(const Problem &problem, const Surrogate &surrogate) {
    if (problem.scenario() != Scenario::uniform(2, 2, 2)) {
        return false;
    }
    std::vector<std::size_t> zeros = surrogate.penalized;
    std::sort(zeros.begin(), zeros.end());
    std::vector<double> objective(16, 0.0);
    objective[0] = 1.0;
    return zeros == std::vector<std::size_t>{4, 8, 15} && surrogate.objective == objective;
}

void polish_hardy_eliminated(const Problem &problem, const std::vector<double> &w, BlochVectors &v) {
    BlochAngles a1 = BlochAngles::from_vector(v[0][1]);
    BlochVectors start = v;
    HardyPolishContext ctx{&problem, &w, &start};
    gsl_multimin_function fn{&hardy_polish_objective, 2, &ctx};
    gsl_vector *x = gsl_vector_alloc(2);
    gsl_vector *step = gsl_vector_alloc(2);
    gsl_vector_set(x, 0, a1.polar);
    gsl_vector_set(x, 1, a1.azimuth);
    gsl_vector_set_all(step, 0.05);
    gsl_multimin_fminimizer *m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2);
    gsl_multimin_fminimizer_set(m, &fn, x, step);
    for (int it = 0; it < kPolishIterations; ++it) {
        if (gsl_multimin_fminimizer_iterate(m) != 0) {
            break;
        }
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), 1e-12) == GSL_SUCCESS) {
            break;
        }
    }
    Eigen::Vector3d best = BlochAngles{gsl_vector_get(m->x, 0), gsl_vector_get(m->x, 1)}.vector();
    BlochVectors candidate = hardy_complete(problem.tensor().coefficients(), best, start);
    if (problem.value(w, candidate) > problem.value(w, v)) {
        v = std::move(candidate);
    }
    gsl_multimin_fminimizer_free(m);
    gsl_vector_free(step);
    gsl_vector_free(x);
}

BlochVectors run_restart(const Problem &problem, const Surrogate &surrogate, std::uint64_t seed, int restart) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(restart));
    const Scenario &sc = problem.scenario();
    BlochVectors v(sc.num_parties());
    for (std::size_t k = 0; k < v.size(); ++k) {
        for (int s = 0; s < sc.settings[k]; ++s) {
            v[k].push_back(random_unit_vector(rng));
        }
    }
    if (surrogate.penalized.empty()) {
        std::vector<double> w = surrogate.weights(0.0);
        problem.see_saw(w, v);
        polish(problem, w, v);
        return v;
    }
    std::vector<double> w;
    for (double mu = 1e3; mu <= 1e9 * 1.0001; mu *= 10.0) {
        w = surrogate.weights(mu);
        problem.see_saw(w, v);
    }
    polish(problem, w, v);
    if (has_hardy_layout(problem, surrogate)) {
        polish_hardy_eliminated(problem, w, v);
    }
    return v;
}

void check_supported(const DensityMatrix &rho, const BellFunctional &f, int restarts) {
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be at least 1");
    }
    std::size_t n = rho.num_parties();
    if (n != 2 && n != 3) {
        throw std::invalid_argument("yield optimization supports two- or three-qubit states");
    }
    for (int d : rho.dims()) {
        if (d != 2) {
            throw std::invalid_argument("yield optimization supports qubit parties only");
        }
    }
    if (f.scenario.num_parties() != n) {
        throw std::invalid_argument("functional " + f.name() + " does not match the state's party count");
    }
    for (int o : f.scenario.outcomes) {
        if (o != 2) {
            throw std::invalid_argument("Bloch measurements need two-outcome functionals");
        }
    }
}

}  // namespace

std::string YieldResult::to_string() const {
    std::ostringstream out;
    out << std::setprecision(12) << value << ' ' << restarts_used << ' ' << seed << '\n';
    for (std::size_t k = 0; k < argmax.num_parties(); ++k) {
        for (std::size_t s = 0; s < argmax.num_settings(k); ++s) {
            const auto &a = argmax.angles(k, s);
            out << party_label(static_cast<int>(k)) << ' ' << s << ' ' << a.polar << ' ' << a.azimuth << '\n';
        }
    }
    return out.str();
}

YieldResult optimize_yield(const DensityMatrix &rho, const BellFunctional &f, int restarts, std::uint64_t seed,
                           Exec exec) {
    check_supported(rho, f, restarts);
    CorrelationTensor tensor(rho);
    Problem problem(tensor, f.scenario);
    Surrogate surrogate = surrogate_of(f);

    std::vector<BlochVectors> found(static_cast<std::size_t>(restarts));
    std::vector<double> values(static_cast<std::size_t>(restarts));
    auto one = [&](int r) {
        BlochVectors v = run_restart(problem, surrogate, seed, r);
        MeasurementFamily fam = MeasurementFamily::from_vectors(v);
        values[static_cast<std::size_t>(r)] = evaluate(f, born_box(rho, fam.to_local_measurements(), Exec::Serial));
        found[static_cast<std::size_t>(r)] = std::move(v);
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int r = 0; r < restarts; ++r) {
            one(r);
        }
    } else {
        for (int r = 0; r < restarts; ++r) {
            one(r);
        }
    }

    std::size_t best = 0;
    for (std::size_t r = 1; r < values.size(); ++r) {
        if (values[r] > values[best]) {
            best = r;
        }
    }
    YieldResult result;
    result.value = values[best];
    result.argmax = MeasurementFamily::from_vectors(found[best]);
    result.restarts_used = restarts;
    result.seed = seed;
    return result;
}

YieldResult optimize_yield(const PureState &psi, const BellFunctional &f, int restarts, std::uint64_t seed,
                           Exec exec) {
    return optimize_yield(DensityMatrix::from_pure(psi), f, restarts, seed, exec);
}

double horodecki_chsh(const DensityMatrix &rho) {
    if (rho.dims() != PartyDims{2, 2}) {
        throw std::invalid_argument("Horodecki criterion needs a two-qubit state");
    }
    Eigen::Matrix3d t = CorrelationTensor(rho).correlation_matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(t.transpose() * t, Eigen::EigenvaluesOnly);
    Eigen::Vector3d m = es.eigenvalues();
    return 2.0 * std::sqrt(std::max(0.0, m(1) + m(2)));
}

double horodecki_chsh(const PureState &psi) {
    return horodecki_chsh(DensityMatrix::from_pure(psi));
}

}  // namespace losr
