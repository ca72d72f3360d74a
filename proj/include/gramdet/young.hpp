#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gramdet/bigint.hpp"
#include "gramdet/poly.hpp"

namespace gramdet {

// Integer partition lambda with weakly decreasing rows; carrier of the
// hook-length dimension f^lambda and the content products of the
// orthogonal-case determinant formulas.
class young_diagram {
public:
    young_diagram() = default;
    explicit young_diagram(std::vector<int> rows) : rows_(std::move(rows)) {
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] < 1) throw std::invalid_argument("young_diagram: rows must be positive");
            if (i && rows_[i] > rows_[i - 1]) throw std::invalid_argument("young_diagram: rows must decrease");
        }
    }

    const std::vector<int>& rows() const { return rows_; }
    int boxes() const {
        int s = 0;
        for (int r : rows_) s += r;
        return s;
    }
    bool empty() const { return rows_.empty(); }

    friend bool operator==(const young_diagram& a, const young_diagram& b) { return a.rows_ == b.rows_; }
    friend bool operator<(const young_diagram& a, const young_diagram& b) { return a.rows_ < b.rows_; }

    std::string to_string() const {
        if (rows_.empty()) return "()";
        std::string s = "(";
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(rows_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> rows_;
};

// All diagrams with m boxes, largest first part first; p(m) of them.
inline std::vector<young_diagram> enumerate_diagrams(int m) {
    if (m < 0) throw std::invalid_argument("enumerate_diagrams: negative m");
    std::vector<young_diagram> out;
    std::vector<int> rows;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.emplace_back(rows);
            return;
        }
        for (int part = std::min(left, max_part); part >= 1; --part) {
            rows.push_back(part);
            rec(left - part, part);
            rows.pop_back();
        }
    };
    rec(m, m);
    return out;
}

inline int hook_length(const young_diagram& lam, int i, int j) {  // 1-based box (i, j)
    const auto& rows = lam.rows();
    int arm = rows[static_cast<size_t>(i - 1)] - j;
    int leg = 0;
    for (size_t r = static_cast<size_t>(i); r < rows.size() && rows[r] >= j; ++r) ++leg;
    return arm + leg + 1;
}

// f^lambda = |lambda|! / prod hooks; number of standard Young tableaux.
inline big_int dimension(const young_diagram& lam) {
    big_int num = factorial(lam.boxes());
    big_int den(1);
    const auto& rows = lam.rows();
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 1; j <= rows[static_cast<size_t>(i)]; ++j)
            den *= big_int(hook_length(lam, static_cast<int>(i) + 1, j));
    return num / den;
}

// 2*lambda, rowwise doubling
inline young_diagram double_diagram(const young_diagram& lam) {
    std::vector<int> rows = lam.rows();
    for (int& r : rows) r *= 2;
    return young_diagram(std::move(rows));
}

enum class content_variant { O, B, Ostar };

// Product over boxes (i, j) of (n + 2j - i - 1) / (n + 2j - i - 2) / (n + j - i)
// for the O / B / O* determinant formulas; empty diagram gives 1.
inline int_poly content_poly(const young_diagram& lam, content_variant v) {
    int_poly acc = int_poly::one();
    const auto& rows = lam.rows();
    for (size_t i0 = 0; i0 < rows.size(); ++i0) {
        int i = static_cast<int>(i0) + 1;
        for (int j = 1; j <= rows[i0]; ++j) {
            long long shift = 0;
            switch (v) {
                case content_variant::O: shift = 2ll * j - i - 1; break;
                case content_variant::B: shift = 2ll * j - i - 2; break;
                case content_variant::Ostar: shift = static_cast<long long>(j) - i; break;
            }
            acc *= int_poly(std::vector<big_int>{big_int(shift), big_int(1)});
        }
    }
    return acc;
}

// Backtracking count of standard tableaux; test oracle for the hook rule,
// never on the main path.
inline long long count_standard_tableaux_brute(const young_diagram& lam) {
    const auto& rows = lam.rows();
    std::vector<int> fill(rows.size(), 0);  // boxes already placed per row
    std::function<long long(int)> rec = [&](int placed) -> long long {
        if (placed == lam.boxes()) return 1;
        long long total = 0;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (fill[r] >= rows[r]) continue;
            if (r > 0 && fill[r - 1] <= fill[r]) continue;  // column must grow downwards
            ++fill[r];
            total += rec(placed + 1);
            --fill[r];
        }
        return total;
    };
    return rec(0);
}

}  // namespace gramdet
