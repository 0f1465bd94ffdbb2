#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace srt {

// Largest ground set the analytic subset sums enumerate (2^20 - 1 subsets).
inline constexpr int kMaxSubsetGround = 20;

// Enumerates every non-empty subset of a ground set exactly once, in binary
// counter order over element positions: mask m = 1 .. 2^n - 1, element j is
// in subset m iff bit j of m is set. The analytic sums use the same order so
// they are reproducible term by term.
class NonEmptySubsets {
 public:
  explicit NonEmptySubsets(std::vector<int> ground) : ground_(std::move(ground)) {
    if (ground_.size() > static_cast<std::size_t>(kMaxSubsetGround)) {
      throw std::invalid_argument("NonEmptySubsets: ground set larger than 20");
    }
  }

  std::uint32_t count() const {
    return (1u << ground_.size()) - 1u;
  }

  class iterator {
   public:
    iterator(const std::vector<int>* ground, std::uint32_t mask)
        : ground_(ground), mask_(mask) {
      refresh();
    }

    const std::vector<int>& operator*() const { return current_; }

    iterator& operator++() {
      ++mask_;
      refresh();
      return *this;
    }

    bool operator==(const iterator& o) const { return mask_ == o.mask_; }
    bool operator!=(const iterator& o) const { return mask_ != o.mask_; }

   private:
    void refresh() {
      current_.clear();
      if (mask_ > (1u << ground_->size()) - 1u) {
        return;
      }
      for (std::size_t j = 0; j < ground_->size(); ++j) {
        if (mask_ >> j & 1u) {
          current_.push_back((*ground_)[j]);
        }
      }
    }

    const std::vector<int>* ground_;
    std::uint32_t mask_;
    std::vector<int> current_;
  };

  iterator begin() const { return {&ground_, 1u}; }
  iterator end() const { return {&ground_, count() + 1u}; }

 private:
  std::vector<int> ground_;
};

}  // namespace srt
