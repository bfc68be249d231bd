#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slink/laurent.hpp"
#include "slink/tl_diagram.hpp"

namespace slink {

inline constexpr int kStatesumMaxLetters = 24;  // 2^c enumeration bound
inline constexpr int kTlMaxStrands = 10;        // Catalan-number diagram basis bound

struct BraidLetter {
  int position;  // 1 .. strands-1
  int sign;      // +1 over-crossing, -1 under-crossing
  bool operator==(const BraidLetter&) const = default;
};

// A braid word on n >= 1 strands: a sequence of signed Artin generators.
// The empty sequence is the identity braid.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  int writhe() const;                // sum of signs
  int closure_components() const;    // cycles of the underlying permutation
  BraidWord inverse() const;         // reversed word with flipped signs

  bool operator==(const BraidWord&) const = default;

  // Text format: whitespace-separated signed integers, "1 -2 1" meaning
  // sigma_1 sigma_2^-1 sigma_1. Strand count explicit or max|letter|+1.
  static BraidWord parse(const std::string& text,
                         std::optional<int> strands = std::nullopt);
  std::string to_text() const;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// Cancel adjacent inverse pairs until stable.
BraidWord free_reduce(const BraidWord& word);

// Markov moves. Conjugation returns the free-reduced g w g^-1; stabilization
// appends sigma_n^sign on a fresh strand.
BraidWord markov_conjugate(const BraidWord& word, BraidLetter g);
BraidWord markov_stabilize(const BraidWord& word, int sign);
// All single-letter conjugations plus both stabilizations.
std::vector<BraidWord> markov_moves(const BraidWord& word);

struct BracketOptions {
  bool memoize = true;  // off = naive 2^c enumeration (same recursion, no cache)
};

// Kauffman bracket of the trace closure by summing all 2^c crossing
// resolutions: each positive letter contributes (identity, weight A) or
// (e_i, weight A^-1), negated signs swap the weights; every closed loop
// contributes a factor d. Normalization d^loops, so the unknot gives d.
LaurentPoly kauffman_bracket_statesum(const BraidWord& word,
                                      const BracketOptions& opts = {});

// Same bracket through the Temperley-Lieb monoid: each letter expands as
// A*identity + A^-1*e_i (sign -1: A^-1*identity + A*e_i), diagrams multiply
// with d per interior loop, and the trace closure is applied at the end.
LaurentPoly kauffman_bracket_tl(const BraidWord& word);

struct LinkInvariantResult {
  LaurentPoly bracket;   // integer mode
  int writhe = 0;
  LaurentPoly jones;     // integer mode; zero when exact == false
  int components = 0;
  bool exact = true;     // d-division was exact
};

// V = d^-1 (-A^3)^(s*w) K with the writhe-exponent sign s in {+1,-1}.
// The calibrated default s = -1 is the one under which V is Markov-invariant
// (V(unknot) = 1 from any stabilized presentation). A non-exact d-division is
// flagged rather than silently failing.
LinkInvariantResult jones(const BraidWord& word, int writhe_sign = -1);

}  // namespace slink
