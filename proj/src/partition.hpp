#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace grasscoh {

/// A partition: weakly decreasing sequence of positive integers.
/// The empty sequence is the empty partition. Trailing zeros are never stored.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw std::invalid_argument("partition parts must be positive and weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t rows() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    Partition conjugate() const;

    auto operator<=>(const Partition&) const = default;

    /// Text form: "[2,1]", empty partition is "[]".
    std::string str() const;

  private:
    std::vector<int> parts_;
};

struct BoxShape {
    int rows;
    int cols;
};

bool fits_in_box(const Partition& p, BoxShape box);

/// All partitions of `weight` with at most box.rows parts, each <= box.cols,
/// in canonical order (reverse-lexicographic: (2) before (1,1)).
std::vector<Partition> partitions_in_box(BoxShape box, int weight);

/// Complementary partition in the box; an involution.
Partition complement(const Partition& p, BoxShape box);

/// Coefficients of the Gaussian binomial [n choose k]_q: entry i counts
/// partitions of i inside the k x (n-k) box. Computed by direct enumeration.
std::vector<long long> gaussian_binomial(int n, int k);

/// Pieri rule for multiplication by the r-th elementary symmetric class:
/// all mu obtained from p by adding a vertical strip of r boxes, with at most
/// row_limit rows. Multiplicity free.
std::vector<Partition> pieri_e(const Partition& p, int r, int row_limit);

/// Littlewood-Richardson coefficients c^nu_{p,q} for all nu, computed by
/// enumerating lattice skew fillings of nu/p with content q.
std::map<Partition, long long> lr_coefficients(const Partition& p, const Partition& q);

}  // namespace grasscoh
