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

#include "losr/quantum/state_io.h"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace losr {

namespace {

bool blank(const std::string &line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

void write_complex(std::ostream &out, Complex z) {
    out << z.real() << ' ' << z.imag() << '\n';
}

}  // namespace

AnyState read_state(std::istream &in) {
    std::string line;
    while (std::getline(in, line) && blank(line)) {
    }
    if (blank(line)) {
        throw std::invalid_argument("state file is empty");
    }
    PartyDims dims;
    {
        std::istringstream header(line);
        int d;
        while (header >> d) {
            dims.push_back(d);
        }
        if (!header.eof()) {
            throw std::invalid_argument("state header must list integer party dimensions");
        }
    }
    std::size_t total = total_dimension(dims);
    std::vector<Complex> entries;
    while (std::getline(in, line)) {
        if (blank(line)) {
            continue;
        }
        std::istringstream row(line);
        double re, im;
        if (!(row >> re >> im)) {
            throw std::invalid_argument("state entries must be `re im` pairs, got '" + line + "'");
        }
        entries.emplace_back(re, im);
    }
    if (entries.size() == total) {
        Eigen::VectorXcd amps(static_cast<Eigen::Index>(total));
        for (std::size_t i = 0; i < total; ++i) {
            amps(static_cast<Eigen::Index>(i)) = entries[i];
        }
        return PureState(std::move(dims), std::move(amps));
    }
    if (entries.size() == total * total) {
        auto n = static_cast<Eigen::Index>(total);
        Eigen::MatrixXcd m(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                m(i, j) = entries[static_cast<std::size_t>(i * n + j)];
            }
        }
        return DensityMatrix(std::move(dims), std::move(m));
    }
    std::ostringstream msg;
    msg << "state file has " << entries.size() << " entries; expected " << total << " or " << total * total;
    throw std::invalid_argument(msg.str());
}

void write_state(std::ostream &out, const PureState &psi) {
    for (std::size_t k = 0; k < psi.dims().size(); ++k) {
        out << (k ? " " : "") << psi.dims()[k];
    }
    out << '\n';
    auto old = out.precision(17);
    for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
        write_complex(out, psi.amplitudes()(i));
    }
    out.precision(old);
}

void write_state(std::ostream &out, const DensityMatrix &rho) {
    for (std::size_t k = 0; k < rho.dims().size(); ++k) {
        out << (k ? " " : "") << rho.dims()[k];
    }
    out << '\n';
    auto old = out.precision(17);
    const auto &m = rho.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            write_complex(out, m(i, j));
        }
    }
    out.precision(old);
}

DensityMatrix as_density(const AnyState &state) {
    if (const auto *psi = std::get_if<PureState>(&state)) {
        return DensityMatrix::from_pure(*psi);
    }
    return std::get<DensityMatrix>(state);
}

}  // namespace losr
