#pragma once

#include <optional>
#include <vector>

namespace slink {

// Planar Temperley-Lieb diagram on n top and n bottom boundary points, plus a
// counter of closed loops accumulated while composing. Points are indexed
// 0..n-1 (top, left to right) and n..2n-1 (bottom, left to right); partner[p]
// is the other endpoint of the chord at p.
//
// Composition stacks `below` underneath `this` (top of the product is this
// diagram's top); every closed loop formed at the interface increments the
// product's loop counter, on top of the operands' accumulated counts.
class TLDiagram {
 public:
  explicit TLDiagram(int strands);                 // identity diagram
  static TLDiagram cup_cap(int strands, int i);    // generator e_i, 1 <= i <= n-1
  static std::optional<TLDiagram> from_matching(std::vector<int> partner,
                                                long loops = 0);

  int strands() const { return strands_; }
  long loops() const { return loops_; }
  const std::vector<int>& partner() const { return partner_; }

  TLDiagram compose(const TLDiagram& below) const;
  TLDiagram without_loops() const;

  // Closed curves formed by joining top k to bottom k (trace closure),
  // not counting the accumulated loop counter.
  int trace_closure_loops() const;

  bool operator==(const TLDiagram& rhs) const {
    return strands_ == rhs.strands_ && loops_ == rhs.loops_ && partner_ == rhs.partner_;
  }
  bool operator<(const TLDiagram& rhs) const {
    if (partner_ != rhs.partner_) return partner_ < rhs.partner_;
    return loops_ < rhs.loops_;
  }

 private:
  TLDiagram() = default;
  int strands_ = 0;
  long loops_ = 0;
  std::vector<int> partner_;
};

// Non-crossing test for a candidate matching, walking the rectangle boundary
// (top left-to-right, then bottom right-to-left) with the standard stack test.
bool is_planar_matching(const std::vector<int>& partner);

}  // namespace slink
