#include "vltau/linalg.hpp"

namespace vltau {

std::vector<int> rref(Mat& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        FieldElem inv = a[r][c].inverse();
        for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            FieldElem f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(Mat a) { return static_cast<int>(rref(a).size()); }

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (a.empty()) {
        for (auto& x : b)
            if (!x.is_zero()) return std::nullopt;
        return Vec{};
    }
    size_t rows = a.size(), cols = a[0].size();
    Mat aug(rows, Vec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    Vec x(cols, FieldElem(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == static_cast<int>(cols)) return std::nullopt;  // 0 = 1 row
        x[pivots[i]] = aug[i][cols];
    }
    return x;
}

std::vector<Vec> nullspace(const Mat& a) {
    std::vector<Vec> basis;
    if (a.empty()) return basis;
    size_t cols = a[0].size();
    Mat m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols, FieldElem(0));
        v[c] = FieldElem(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat c(n, Vec(m, FieldElem(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

}  // namespace vltau
