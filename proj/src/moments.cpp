// Copyright 2026 The matmom Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matmom/moments.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "matmom/kernels.hpp"

namespace matmom {

MomentSequence::MomentSequence(int n, std::vector<Matrix> moments) : n_(n), moments_(std::move(moments)) {
    if (n <= 0) {
        throw InputError("moments: n must be positive");
    }
    if (moments_.empty()) {
        throw InputError("moments: sequence must contain S_0");
    }
    for (std::size_t p = 0; p < moments_.size(); ++p) {
        Matrix &s = moments_[p];
        if (s.rows() != n || s.cols() != n) {
            throw InputError("moments[" + std::to_string(p) + "] is not " + std::to_string(n) + "x" +
                             std::to_string(n));
        }
        if (max_abs(s - s.transpose()) > 1e-12 * max_abs(s)) {
            throw InputError("moments[" + std::to_string(p) + "] is not symmetric");
        }
        s = (0.5 * (s + s.transpose())).eval();
    }
}

PsdVerdict psd_verdict(const Matrix &m, double tol) {
    const kernels::Spectrum sp = kernels::spectrum(m);
    return {sp.min >= -tol * std::max(1.0, sp.abs_max), sp.min};
}

namespace {

Matrix assemble(int n, int m, const std::function<Matrix(int)> &block) {
    const int b = m + 1;
    Matrix h(b * n, b * n);
    for (int i = 0; i < b; ++i) {
        for (int j = i; j < b; ++j) {
            const Matrix blk = block(i + j);
            h.block(i * n, j * n, n, n) = blk;
            h.block(j * n, i * n, n, n) = blk.transpose();
        }
    }
    return h;
}

// One family of block Hankel matrices indexed by the order m.
struct Family {
    const char *name;
    int reach; ///< highest moment index used is 2m + reach
    std::function<Matrix(int)> build;
};

PsdReport run_families(const MomentSequence &s, const std::vector<Family> &families, double tol) {
    PsdReport report;
    report.min_eigenvalue = std::numeric_limits<double>::infinity();
    const int d = s.max_degree();
    for (int m = 0;; ++m) {
        bool any = false;
        for (const Family &f : families) {
            if (2 * m + f.reach > d) {
                continue;
            }
            any = true;
            const PsdVerdict v = psd_verdict(f.build(m), tol);
            report.min_eigenvalue = std::min(report.min_eigenvalue, v.min_eigenvalue);
            if (!v.pass && report.pass) {
                report.pass = false;
                report.failing_order = m;
                report.failing_family = f.name;
            }
        }
        if (!any) {
            break;
        }
        report.tested_orders.push_back(m);
    }
    if (report.tested_orders.empty()) {
        report.min_eigenvalue = 0.0;
    }
    return report;
}

Family hankel_family(const MomentSequence &s, const char *name, int shift) {
    return {name, shift, [&s, shift](int m) { return block_hankel(s, m, shift); }};
}

Family difference_family(const MomentSequence &s, const char *name, int shift) {
    return {name, shift + 1, [&s, shift](int m) { return block_hankel_difference(s, m, shift); }};
}

} // namespace

Matrix block_hankel(const MomentSequence &s, int m, int shift) {
    if (m < 0 || shift < 0 || shift > 2) {
        throw InputError("block_hankel: need m >= 0 and shift in {0,1,2}");
    }
    if (2 * m + shift > s.max_degree()) {
        throw InputError("block_hankel: degree overflow, 2m+shift = " + std::to_string(2 * m + shift) +
                         " exceeds D = " + std::to_string(s.max_degree()));
    }
    return assemble(s.size(), m, [&](int p) { return s[p + shift]; });
}

Matrix block_hankel_difference(const MomentSequence &s, int m, int shift) {
    if (m < 0 || shift < 0 || shift > 1) {
        throw InputError("block_hankel_difference: need m >= 0 and shift in {0,1}");
    }
    if (2 * m + shift + 1 > s.max_degree()) {
        throw InputError("block_hankel_difference: degree overflow");
    }
    return assemble(s.size(), m, [&](int p) { return Matrix(s[p + shift] - s[p + shift + 1]); });
}

std::string to_string(MomentVariant v) {
    switch (v) {
    case MomentVariant::Hamburger:
        return "hamburger";
    case MomentVariant::Stieltjes:
        return "stieltjes";
    case MomentVariant::Hausdorff:
        return "hausdorff";
    }
    return "";
}

MomentVariant parse_variant(const std::string &name) {
    if (name == "hamburger") {
        return MomentVariant::Hamburger;
    }
    if (name == "stieltjes") {
        return MomentVariant::Stieltjes;
    }
    if (name == "hausdorff") {
        return MomentVariant::Hausdorff;
    }
    throw InputError("variant: expected hamburger|stieltjes|hausdorff, got '" + name + "'");
}

PsdReport check_hamburger(const MomentSequence &s, double tol) {
    return run_families(s, {hankel_family(s, "hankel", 0)}, tol);
}

PsdReport check_stieltjes(const MomentSequence &s, double tol) {
    return run_families(s, {hankel_family(s, "hankel", 0), hankel_family(s, "shifted", 1)}, tol);
}

PsdReport check_hausdorff(const MomentSequence &s, double tol) {
    if (s.max_degree() < 2) {
        throw InputError("check_hausdorff: needs D >= 2, got D = " + std::to_string(s.max_degree()));
    }
    return run_families(s,
                        {hankel_family(s, "hankel", 0), hankel_family(s, "shifted", 1),
                         difference_family(s, "diff", 0), difference_family(s, "diff_shifted", 1)},
                        tol);
}

PsdReport check(const MomentSequence &s, MomentVariant variant, double tol) {
    switch (variant) {
    case MomentVariant::Hamburger:
        return check_hamburger(s, tol);
    case MomentVariant::Stieltjes:
        return check_stieltjes(s, tol);
    case MomentVariant::Hausdorff:
        return check_hausdorff(s, tol);
    }
    return {};
}

PsdReport operator_check(const MomentSequence &s, std::span<const Matrix> tuple, MomentVariant variant,
                         double tol) {
    if (tuple.empty()) {
        throw InputError("operator_check: empty operator tuple");
    }
    const int m = static_cast<int>(tuple.size()) - 1;
    for (const Matrix &a : tuple) {
        if (a.rows() != s.size() || a.cols() != s.size()) {
            throw InputError("operator_check: tuple entry size does not match the moments");
        }
    }
    const int reach = variant == MomentVariant::Hamburger ? 0 : variant == MomentVariant::Stieltjes ? 1 : 2;
    if (2 * m + reach > s.max_degree()) {
        throw InputError("operator_check: degree overflow, 2m+" + std::to_string(reach) + " exceeds D = " +
                         std::to_string(s.max_degree()));
    }

    // pairing[p](i, j) = ⟨S_p, A_iᵀ A_j⟩_F = L(x^p A_iᵀ A_j)
    std::vector<Matrix> gram(static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(m + 1));
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
            gram[static_cast<std::size_t>(i * (m + 1) + j)] =
                tuple[static_cast<std::size_t>(i)].transpose() * tuple[static_cast<std::size_t>(j)];
        }
    }
    auto scalar = [&](const std::function<Matrix(int)> &moment) {
        Matrix out(m + 1, m + 1);
        for (int i = 0; i <= m; ++i) {
            for (int j = 0; j <= m; ++j) {
                out(i, j) = (moment(i + j).array() * gram[static_cast<std::size_t>(i * (m + 1) + j)].array()).sum();
            }
        }
        return Matrix(0.5 * (out + out.transpose()));
    };

    std::vector<std::pair<const char *, Matrix>> mats;
    mats.emplace_back("hankel", scalar([&](int p) { return s[p]; }));
    if (variant != MomentVariant::Hamburger) {
        mats.emplace_back("shifted", scalar([&](int p) { return s[p + 1]; }));
    }
    if (variant == MomentVariant::Hausdorff) {
        mats.emplace_back("diff", scalar([&](int p) { return Matrix(s[p] - s[p + 1]); }));
        mats.emplace_back("diff_shifted", scalar([&](int p) { return Matrix(s[p + 1] - s[p + 2]); }));
    }

    PsdReport report;
    report.tested_orders = {m};
    report.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (const auto &[name, mat] : mats) {
        const PsdVerdict v = psd_verdict(mat, tol);
        report.min_eigenvalue = std::min(report.min_eigenvalue, v.min_eigenvalue);
        if (!v.pass && report.pass) {
            report.pass = false;
            report.failing_order = m;
            report.failing_family = name;
        }
    }
    return report;
}

} // namespace matmom
