#include "partition.hpp"

#include <algorithm>
#include <functional>

namespace grasscoh {

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

bool fits_in_box(const Partition& p, BoxShape box) {
    return static_cast<int>(p.rows()) <= box.rows && p.part(0) <= box.cols;
}

std::vector<Partition> partitions_in_box(BoxShape box, int weight) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == box.rows) return;
        int rows_left = box.rows - static_cast<int>(cur.size());
        for (int p = std::min(maxpart, remaining); p >= 1; --p) {
            if (static_cast<long long>(p) * rows_left < remaining) break;
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (weight >= 0 && weight <= box.rows * box.cols) rec(weight, box.cols);
    return out;
}

Partition complement(const Partition& p, BoxShape box) {
    if (!fits_in_box(p, box))
        throw std::invalid_argument("partition does not fit in box");
    std::vector<int> out;
    out.reserve(box.rows);
    for (int i = box.rows - 1; i >= 0; --i) out.push_back(box.cols - p.part(i));
    return Partition(std::move(out));
}

std::vector<long long> gaussian_binomial(int n, int k) {
    if (k <= 0 || k >= n) throw std::invalid_argument("gaussian_binomial requires 0 < k < n");
    BoxShape box{k, n - k};
    int d = k * (n - k);
    std::vector<long long> out(d + 1);
    for (int w = 0; w <= d; ++w)
        out[w] = static_cast<long long>(partitions_in_box(box, w).size());
    return out;
}

std::vector<Partition> pieri_e(const Partition& p, int r, int row_limit) {
    if (r < 1) throw std::invalid_argument("pieri_e requires r >= 1");
    std::vector<Partition> out;
    int nrows = static_cast<int>(p.rows());
    int max_rows = std::min(row_limit, nrows + r);
    // Vertical strip: at most one added box per row; rows processed top down.
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (remaining > max_rows - row + 1) return;
        if (row > nrows && remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (row > max_rows) return;
        int base = p.part(row - 1);
        for (int add = std::min(1, remaining); add >= 0; --add) {
            int val = base + add;
            if (val == 0) {
                // Past the bottom of both shapes; nothing below can add boxes.
                if (remaining == 0) out.emplace_back(cur);
                return;
            }
            if (!cur.empty() && val > cur.back()) continue;
            cur.push_back(val);
            rec(row + 1, remaining - add);
            cur.pop_back();
        }
    };
    rec(1, r);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.parts() > b.parts();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Checks the lattice condition incrementally: when strip i+1 (1-based) is
// added on top of strip i, for every row r >= 0 the number of (i+1)-entries
// in rows 1..r+1 must not exceed the number of i-entries in rows 1..r.
bool lattice_ok(const std::vector<int>& prev_strip, const std::vector<int>& next_strip) {
    std::size_t nrows = std::max(prev_strip.size(), next_strip.size());
    long long prev_cum = 0, next_cum = 0;
    for (std::size_t r = 0; r <= nrows; ++r) {
        next_cum += r < next_strip.size() ? next_strip[r] : 0;  // rows 1..r+1
        if (next_cum > prev_cum) return false;
        prev_cum += r < prev_strip.size() ? prev_strip[r] : 0;  // rows 1..r+1
    }
    return true;
}

// Enumerate horizontal strips of `size` boxes added to `shape`; calls visit
// with the new shape and the per-row added counts. Horizontal strip means
// next[r] <= shape[r-1] for r >= 1 (no two added boxes share a column).
void horizontal_strips(const std::vector<int>& shape, int size,
                       const std::function<void(const std::vector<int>&, const std::vector<int>&)>& visit) {
    int nrows = static_cast<int>(shape.size());
    std::vector<int> next(nrows + 1, 0);
    std::vector<int> strip(nrows + 1, 0);
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row == nrows + 1) {
            if (remaining == 0) {
                std::vector<int> ns(next.begin(), next.end());
                while (!ns.empty() && ns.back() == 0) ns.pop_back();
                visit(ns, strip);
            }
            return;
        }
        int base = row < nrows ? shape[row] : 0;
        int cap = base + remaining;
        if (row > 0) cap = std::min(cap, shape[row - 1]);
        for (int v = base; v <= cap; ++v) {
            next[row] = v;
            strip[row] = v - base;
            rec(row + 1, remaining - (v - base));
        }
        next[row] = base;
        strip[row] = 0;
    };
    rec(0, size);
}

}  // namespace

std::map<Partition, long long> lr_coefficients(const Partition& p, const Partition& q) {
    std::map<Partition, long long> out;
    if (q.empty()) {
        out[p] = 1;
        return out;
    }
    // Iterated horizontal strips, one per row of q; the lattice word condition
    // between consecutive strips makes each chain an LR skew tableau of some
    // shape nu/p with content q.
    std::function<void(std::size_t, std::vector<int>, std::vector<int>)> run =
        [&](std::size_t i, std::vector<int> shape, std::vector<int> prev) {
            if (i == q.rows()) {
                out[Partition(shape)] += 1;
                return;
            }
            horizontal_strips(shape, q.part(i), [&](const std::vector<int>& ns, const std::vector<int>& strip) {
                if (i == 0 || lattice_ok(prev, strip)) run(i + 1, ns, strip);
            });
        };
    run(0, p.parts(), {});
    return out;
}

}  // namespace grasscoh
