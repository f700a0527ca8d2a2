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

#ifndef LOSR_BOXES_BOX_H
#define LOSR_BOXES_BOX_H

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace losr {

/// Number of settings and outcomes for each party of a Bell scenario.
struct Scenario {
    std::vector<int> settings;
    std::vector<int> outcomes;

    static Scenario uniform(std::size_t parties, int settings, int outcomes);

    std::size_t num_parties() const {
        return settings.size();
    }
    std::size_t num_setting_tuples() const;
    std::size_t num_outcome_tuples() const;
    std::size_t table_size() const {
        return num_setting_tuples() * num_outcome_tuples();
    }
    /// Throws unless both lists have the same nonzero length and all entries
    /// are positive.
    void validate() const;

    bool operator==(const Scenario &) const = default;
};

/// A conditional distribution p(outcomes | settings).
///
/// The table is stored row by row: one row per settings tuple (row-major,
/// party 0 most significant) holding the outcome distribution in the same
/// lexicographic order.
class Box {
   public:
    /// Validates entries >= -1e-12 and every row summing to 1 within 1e-9.
    Box(Scenario scenario, std::vector<double> table);

    const Scenario &scenario() const {
        return scenario_;
    }
    const std::vector<double> &table() const {
        return table_;
    }
    std::size_t num_parties() const {
        return scenario_.num_parties();
    }

    double prob(const std::vector<int> &outcomes, const std::vector<int> &settings) const;
    std::size_t entry_index(const std::vector<int> &outcomes, const std::vector<int> &settings) const;

    /// (1 - t) * this + t * other.
    Box mix(const Box &other, double t) const;

   private:
    Scenario scenario_;
    std::vector<double> table_;
};

constexpr double kBoxNegativityTolerance = 1e-12;
constexpr double kBoxNormalizationTolerance = 1e-9;

/// True iff the marginal of every proper subset of parties is independent of
/// the settings of the remaining parties, within `eps`.
bool is_no_signaling(const Box &box, double eps);

/// p = 1 / (number of outcome tuples) everywhere.
Box uniform_box(const Scenario &scenario);

/// Bipartite binary box with a xor b = x*y and uniform marginals.
Box pr_box();

/// Bipartite binary box reaching CHSH = 2 sqrt 2:
/// p(ab|xy) = (1 + (-1)^(a xor b xor xy) / sqrt 2) / 4.
Box tsirelson_box();

/// Text format: a header line `n s_1 .. s_n o_1 .. o_n`, then one line per
/// settings tuple listing its outcome distribution.
Box read_box(std::istream &in);
void write_box(std::ostream &out, const Box &box);

}  // namespace losr

#endif
