#include "slink/tl_diagram.hpp"

#include <stdexcept>

namespace slink {

TLDiagram::TLDiagram(int strands) : strands_(strands) {
  if (strands < 1) throw std::invalid_argument("TLDiagram: strands must be >= 1");
  partner_.resize(2 * strands);
  for (int k = 0; k < strands; ++k) {
    partner_[k] = k + strands;
    partner_[k + strands] = k;
  }
}

TLDiagram TLDiagram::cup_cap(int strands, int i) {
  if (i < 1 || i >= strands) throw std::invalid_argument("cup_cap: bad position");
  TLDiagram d(strands);
  const int a = i - 1, b = i;  // 0-based adjacent pair
  d.partner_[a] = b;
  d.partner_[b] = a;
  d.partner_[strands + a] = strands + b;
  d.partner_[strands + b] = strands + a;
  return d;
}

std::optional<TLDiagram> TLDiagram::from_matching(std::vector<int> partner, long loops) {
  const int n2 = static_cast<int>(partner.size());
  if (n2 < 2 || n2 % 2 != 0 || loops < 0) return std::nullopt;
  for (int p = 0; p < n2; ++p) {
    if (partner[p] < 0 || partner[p] >= n2 || partner[p] == p ||
        partner[partner[p]] != p) {
      return std::nullopt;
    }
  }
  if (!is_planar_matching(partner)) return std::nullopt;
  TLDiagram d;
  d.strands_ = n2 / 2;
  d.loops_ = loops;
  d.partner_ = std::move(partner);
  return d;
}

bool is_planar_matching(const std::vector<int>& partner) {
  const int n2 = static_cast<int>(partner.size());
  const int n = n2 / 2;
  // Boundary order: top 0..n-1, bottom 2n-1..n.
  std::vector<int> order;
  order.reserve(n2);
  for (int k = 0; k < n; ++k) order.push_back(k);
  for (int k = n2 - 1; k >= n; --k) order.push_back(k);
  std::vector<int> pos(n2);
  for (int k = 0; k < n2; ++k) pos[order[k]] = k;

  std::vector<int> stack;
  for (int p : order) {
    if (pos[partner[p]] > pos[p]) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != partner[p]) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

TLDiagram TLDiagram::compose(const TLDiagram& below) const {
  if (strands_ != below.strands_) {
    throw std::invalid_argument("compose: strand count mismatch");
  }
  const int n = strands_;
  TLDiagram out;
  out.strands_ = n;
  out.partner_.assign(2 * n, -1);
  out.loops_ = loops_ + below.loops_;

  // Walk chords through the interface (this->bottom k glued to below->top k).
  // External points: this->top p (product id p) and below->bottom q (product
  // id q). Interface crossings alternate between the two diagrams.
  auto follow_from_top = [&](int start_top) {
    int p = partner_[start_top];  // inside this diagram
    bool in_upper = true;
    while (true) {
      if (in_upper) {
        if (p < n) return p;             // ended on this->top: product top point
        p = below.partner_[p - n];       // cross interface into below
        in_upper = false;
      } else {
        if (p >= n) return p;            // ended on below->bottom: product bottom
        p = partner_[p + n];             // cross interface back up
        in_upper = true;
      }
    }
  };

  for (int t = 0; t < n; ++t) {
    if (out.partner_[t] != -1) continue;
    int end = follow_from_top(t);
    out.partner_[t] = end;
    out.partner_[end] = t;
  }
  for (int b = n; b < 2 * n; ++b) {
    if (out.partner_[b] != -1) continue;
    // Chord starting on below's bottom going up; trace symmetrically.
    int p = below.partner_[b];
    bool in_lower = true;
    while (true) {
      if (in_lower) {
        if (p >= n) { out.partner_[b] = p; out.partner_[p] = b; break; }
        p = partner_[p + n];
        in_lower = false;
      } else {
        if (p < n) { out.partner_[b] = p; out.partner_[p] = b; break; }
        p = below.partner_[p - n];
        in_lower = true;
      }
    }
  }

  // Interior loops: interface edges not visited by any external chord. Count
  // cycles among interface indices via the pairing (this->bottom, below->top).
  std::vector<bool> seen(n, false);
  auto mark_path = [&](int start_top) {
    int p = partner_[start_top];
    bool in_upper = true;
    while (true) {
      if (in_upper) {
        if (p < n) return;
        seen[p - n] = true;
        p = below.partner_[p - n];
        in_upper = false;
      } else {
        if (p >= n) return;
        seen[p] = true;
        p = partner_[p + n];
        in_upper = true;
      }
    }
  };
  for (int t = 0; t < n; ++t) mark_path(t);
  for (int b = n; b < 2 * n; ++b) {
    int p = below.partner_[b];
    bool in_lower = true;
    while (true) {
      if (in_lower) {
        if (p >= n) break;
        seen[p] = true;
        p = partner_[p + n];
        in_lower = false;
      } else {
        if (p < n) break;
        seen[p - n] = true;
        p = below.partner_[p - n];
        in_lower = true;
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    if (seen[k]) continue;
    // Trace one interior loop starting at interface index k.
    int p = k;
    do {
      seen[p] = true;
      int up = partner_[p + n];          // within this diagram (a bottom point)
      // up must be another bottom point of this diagram
      int q = up - n;
      seen[q] = true;
      int dn = below.partner_[q];        // within below (a top point)
      p = dn;
    } while (p != k);
    ++out.loops_;
  }
  return out;
}

TLDiagram TLDiagram::without_loops() const {
  TLDiagram d(*this);
  d.loops_ = 0;
  return d;
}

int TLDiagram::trace_closure_loops() const {
  const int n = strands_;
  std::vector<bool> seen(2 * n, false);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    int p = start;
    do {
      seen[p] = true;
      int q = partner_[p];
      seen[q] = true;
      p = (q < n) ? q + n : q - n;  // closure arc: top k <-> bottom k
    } while (p != start);
    ++loops;
  }
  return loops;
}

}  // namespace slink
