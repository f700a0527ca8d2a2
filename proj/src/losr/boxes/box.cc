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

#include "losr/boxes/box.h"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "losr/quantum/index.h"

namespace losr {

Scenario Scenario::uniform(std::size_t parties, int settings, int outcomes) {
    return Scenario{std::vector<int>(parties, settings), std::vector<int>(parties, outcomes)};
}

std::size_t Scenario::num_setting_tuples() const {
    return index::product(settings);
}

std::size_t Scenario::num_outcome_tuples() const {
    return index::product(outcomes);
}

void Scenario::validate() const {
    if (settings.empty() || settings.size() != outcomes.size()) {
        throw std::invalid_argument("scenario needs matching settings and outcomes per party");
    }
    for (std::size_t k = 0; k < settings.size(); ++k) {
        if (settings[k] <= 0 || outcomes[k] <= 0) {
            throw std::invalid_argument("scenario sizes must be positive");
        }
    }
    if (table_size() > (std::size_t{1} << 24)) {
        throw std::invalid_argument("scenario is too large for a dense table");
    }
}

Box::Box(Scenario scenario, std::vector<double> table) : scenario_(std::move(scenario)), table_(std::move(table)) {
    scenario_.validate();
    if (table_.size() != scenario_.table_size()) {
        throw std::invalid_argument("box table has the wrong number of entries");
    }
    std::size_t rows = scenario_.num_setting_tuples();
    std::size_t cols = scenario_.num_outcome_tuples();
    for (std::size_t r = 0; r < rows; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
            double p = table_[r * cols + c];
            if (!std::isfinite(p) || p < -kBoxNegativityTolerance) {
                throw std::invalid_argument("box has a negative probability");
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > kBoxNormalizationTolerance) {
            std::ostringstream msg;
            msg << "box row " << r << " sums to " << sum;
            throw std::invalid_argument(msg.str());
        }
    }
}

std::size_t Box::entry_index(const std::vector<int> &outcomes, const std::vector<int> &settings) const {
    std::size_t row = index::flatten(settings, scenario_.settings);
    std::size_t col = index::flatten(outcomes, scenario_.outcomes);
    return row * scenario_.num_outcome_tuples() + col;
}

double Box::prob(const std::vector<int> &outcomes, const std::vector<int> &settings) const {
    return table_[entry_index(outcomes, settings)];
}

Box Box::mix(const Box &other, double t) const {
    if (!(other.scenario_ == scenario_)) {
        throw std::invalid_argument("cannot mix boxes from different scenarios");
    }
    std::vector<double> out(table_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (1.0 - t) * table_[i] + t * other.table_[i];
    }
    return Box(scenario_, std::move(out));
}

bool is_no_signaling(const Box &box, double eps) {
    const auto &sc = box.scenario();
    std::size_t n = sc.num_parties();
    std::size_t rows = sc.num_setting_tuples();
    std::size_t cols = sc.num_outcome_tuples();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        // For each settings tuple, the marginal on the parties in `mask` must
        // equal the marginal obtained with the others' settings zeroed.
        for (std::size_t r = 0; r < rows; ++r) {
            auto s = index::digits(r, sc.settings);
            auto ref = s;
            for (std::size_t k = 0; k < n; ++k) {
                if (!(mask & (std::size_t{1} << k))) {
                    ref[k] = 0;
                }
            }
            if (ref == s) {
                continue;
            }
            std::size_t ref_row = index::flatten(ref, sc.settings);
            std::vector<double> diff_acc;
            std::vector<int> sub_dims;
            for (std::size_t k = 0; k < n; ++k) {
                if (mask & (std::size_t{1} << k)) {
                    sub_dims.push_back(sc.outcomes[k]);
                }
            }
            diff_acc.assign(index::product(sub_dims), 0.0);
            for (std::size_t c = 0; c < cols; ++c) {
                auto o = index::digits(c, sc.outcomes);
                std::vector<int> sub;
                for (std::size_t k = 0; k < n; ++k) {
                    if (mask & (std::size_t{1} << k)) {
                        sub.push_back(o[k]);
                    }
                }
                std::size_t idx = index::flatten(sub, sub_dims);
                diff_acc[idx] += box.table()[r * cols + c] - box.table()[ref_row * cols + c];
            }
            for (double d : diff_acc) {
                if (std::abs(d) > eps) {
                    return false;
                }
            }
        }
    }
    return true;
}

Box uniform_box(const Scenario &scenario) {
    scenario.validate();
    return Box(scenario, std::vector<double>(scenario.table_size(), 1.0 / static_cast<double>(scenario.num_outcome_tuples())));
}

Box pr_box() {
    Scenario sc = Scenario::uniform(2, 2, 2);
    std::vector<double> table(16);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    table[(x * 2 + y) * 4 + a * 2 + b] = ((a ^ b) == (x & y)) ? 0.5 : 0.0;
                }
            }
        }
    }
    return Box(sc, std::move(table));
}

Box tsirelson_box() {
    Scenario sc = Scenario::uniform(2, 2, 2);
    std::vector<double> table(16);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    double sign = ((a ^ b ^ (x & y)) == 0) ? 1.0 : -1.0;
                    table[(x * 2 + y) * 4 + a * 2 + b] = 0.25 * (1.0 + sign / std::sqrt(2.0));
                }
            }
        }
    }
    return Box(sc, std::move(table));
}

Box read_box(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("box file is empty");
    }
    std::istringstream header(line);
    std::size_t n = 0;
    if (!(header >> n) || n == 0 || n > 16) {
        throw std::invalid_argument("box header must start with the number of parties");
    }
    Scenario sc;
    sc.settings.resize(n);
    sc.outcomes.resize(n);
    for (auto &s : sc.settings) {
        if (!(header >> s)) {
            throw std::invalid_argument("box header is missing settings counts");
        }
    }
    for (auto &o : sc.outcomes) {
        if (!(header >> o)) {
            throw std::invalid_argument("box header is missing outcome counts");
        }
    }
    sc.validate();
    std::vector<double> table;
    table.reserve(sc.table_size());
    std::size_t rows = 0;
    while (rows < sc.num_setting_tuples() && std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream row(line);
        for (std::size_t c = 0; c < sc.num_outcome_tuples(); ++c) {
            double p;
            if (!(row >> p)) {
                throw std::invalid_argument("box row " + std::to_string(rows) + " is too short");
            }
            table.push_back(p);
        }
        ++rows;
    }
    if (rows != sc.num_setting_tuples()) {
        throw std::invalid_argument("box file has too few rows");
    }
    return Box(std::move(sc), std::move(table));
}

void write_box(std::ostream &out, const Box &box) {
    const auto &sc = box.scenario();
    out << sc.num_parties();
    for (int s : sc.settings) {
        out << ' ' << s;
    }
    for (int o : sc.outcomes) {
        out << ' ' << o;
    }
    out << '\n';
    std::size_t cols = sc.num_outcome_tuples();
    auto old_precision = out.precision(17);
    for (std::size_t r = 0; r < sc.num_setting_tuples(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c) {
                out << ' ';
            }
            out << box.table()[r * cols + c];
        }
        out << '\n';
    }
    out.precision(old_precision);
}

}  // namespace losr
