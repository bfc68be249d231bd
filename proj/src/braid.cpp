#include "slink/braid.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slink {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("braid word: strands must be >= 1");
  for (const BraidLetter& l : letters_) {
    if (l.position < 1 || l.position >= strands_) {
      throw std::invalid_argument("braid word: letter position out of range");
    }
    if (l.sign != 1 && l.sign != -1) {
      throw std::invalid_argument("braid word: letter sign must be +-1");
    }
  }
}

int BraidWord::writhe() const {
  int w = 0;
  for (const BraidLetter& l : letters_) w += l.sign;
  return w;
}

int BraidWord::closure_components() const {
  std::vector<int> perm(strands_);
  std::iota(perm.begin(), perm.end(), 0);
  for (const BraidLetter& l : letters_) {
    std::swap(perm[l.position - 1], perm[l.position]);
  }
  std::vector<bool> seen(strands_, false);
  int cycles = 0;
  for (int s = 0; s < strands_; ++s) {
    if (seen[s]) continue;
    for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
    ++cycles;
  }
  return cycles;
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> rev(letters_.rbegin(), letters_.rend());
  for (BraidLetter& l : rev) l.sign = -l.sign;
  return BraidWord(strands_, std::move(rev));
}

BraidWord BraidWord::parse(const std::string& text, std::optional<int> strands) {
  std::istringstream is(text);
  std::vector<BraidLetter> letters;
  int max_pos = 0;
  std::string tok;
  while (is >> tok) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("braid word: bad token '" + tok + "'");
    }
    if (v == 0) throw std::invalid_argument("braid word: letter 0 is not a generator");
    letters.push_back({std::abs(v), v > 0 ? 1 : -1});
    max_pos = std::max(max_pos, std::abs(v));
  }
  int n = strands.value_or(std::max(max_pos + 1, 1));
  return BraidWord(n, std::move(letters));
}

std::string BraidWord::to_text() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) os << ' ';
    os << letters_[k].sign * letters_[k].position;
  }
  return os.str();
}

BraidWord free_reduce(const BraidWord& word) {
  std::vector<BraidLetter> out;
  for (const BraidLetter& l : word.letters()) {
    if (!out.empty() && out.back().position == l.position &&
        out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(word.strands(), std::move(out));
}

BraidWord markov_conjugate(const BraidWord& word, BraidLetter g) {
  std::vector<BraidLetter> letters;
  letters.reserve(word.letters().size() + 2);
  letters.push_back(g);
  letters.insert(letters.end(), word.letters().begin(), word.letters().end());
  letters.push_back({g.position, -g.sign});
  return free_reduce(BraidWord(word.strands(), std::move(letters)));
}

BraidWord markov_stabilize(const BraidWord& word, int sign) {
  std::vector<BraidLetter> letters = word.letters();
  letters.push_back({word.strands(), sign});
  return BraidWord(word.strands() + 1, std::move(letters));
}

std::vector<BraidWord> markov_moves(const BraidWord& word) {
  std::vector<BraidWord> out;
  for (int pos = 1; pos < word.strands(); ++pos) {
    for (int sign : {1, -1}) out.push_back(markov_conjugate(word, {pos, sign}));
  }
  out.push_back(markov_stabilize(word, +1));
  out.push_back(markov_stabilize(word, -1));
  return out;
}

namespace {

// Statesum frontier: a matching on n fixed top points (ids 0..n-1) and n
// moving frontier points (ids n..2n-1). Applying e_i caps the frontier pair
// (possibly closing a loop) and opens a fresh cup in its place.
struct Frontier {
  std::vector<int> partner;

  explicit Frontier(int n) {
    partner.resize(2 * n);
    for (int k = 0; k < n; ++k) {
      partner[k] = k + n;
      partner[k + n] = k;
    }
  }

  // Returns number of loops closed (0 or 1).
  int apply_cupcap(int n, int i) {
    const int fi = n + i - 1, fj = n + i;
    const int p = partner[fi], q = partner[fj];
    if (p == fj) return 1;  // already a cup here: the cap closes a loop
    partner[p] = q;
    partner[q] = p;
    partner[fi] = fj;
    partner[fj] = fi;
    return 0;
  }

  int closure_loops(int n) const {
    std::vector<bool> seen(2 * n, false);
    int loops = 0;
    for (int start = 0; start < 2 * n; ++start) {
      if (seen[start]) continue;
      int p = start;
      do {
        seen[p] = true;
        int q = partner[p];
        seen[q] = true;
        p = (q < n) ? q + n : q - n;
      } while (p != start);
      ++loops;
    }
    return loops;
  }
};

class StatesumEngine {
 public:
  StatesumEngine(const BraidWord& word, bool memoize)
      : word_(word), memoize_(memoize), d_(LaurentPoly::d_poly()) {}

  LaurentPoly run() {
    Frontier f(word_.strands());
    return suffix(0, f);
  }

 private:
  using Key = std::pair<std::size_t, std::vector<int>>;

  LaurentPoly suffix(std::size_t idx, const Frontier& f) {
    const int n = word_.strands();
    if (idx == word_.letters().size()) {
      return d_.pow(static_cast<unsigned>(f.closure_loops(n)));
    }
    if (memoize_) {
      auto it = memo_.find({idx, f.partner});
      if (it != memo_.end()) return it->second;
    }
    const BraidLetter& l = word_.letters()[idx];
    // Identity smoothing keeps the frontier; the e_i smoothing may close a loop.
    LaurentPoly value =
        LaurentPoly::monomial(l.sign, 1) * suffix(idx + 1, f);
    Frontier g = f;
    int closed = g.apply_cupcap(n, l.position);
    LaurentPoly branch = LaurentPoly::monomial(-l.sign, 1) * suffix(idx + 1, g);
    if (closed) branch = branch * d_;
    value = value + branch;
    if (memoize_) memo_.insert({{idx, f.partner}, value});
    return value;
  }

  const BraidWord& word_;
  bool memoize_;
  LaurentPoly d_;
  std::map<Key, LaurentPoly> memo_;
};

}  // namespace

LaurentPoly kauffman_bracket_statesum(const BraidWord& word, const BracketOptions& opts) {
  if (word.letters().size() > kStatesumMaxLetters) {
    throw std::invalid_argument(
        "statesum bracket limited to 24 crossings; use the TL-monoid method");
  }
  return StatesumEngine(word, opts.memoize).run();
}

LaurentPoly kauffman_bracket_tl(const BraidWord& word) {
  if (word.strands() > kTlMaxStrands) {
    throw std::invalid_argument("TL bracket limited to 10 strands");
  }
  const int n = word.strands();
  const LaurentPoly d = LaurentPoly::d_poly();

  std::map<TLDiagram, LaurentPoly> acc;
  acc.emplace(TLDiagram(n), LaurentPoly::one());

  for (const BraidLetter& l : word.letters()) {
    const TLDiagram e = TLDiagram::cup_cap(n, l.position);
    std::map<TLDiagram, LaurentPoly> next;
    auto add = [&](const TLDiagram& dia, const LaurentPoly& coeff) {
      auto [it, inserted] = next.emplace(dia, coeff);
      if (!inserted) it->second = it->second + coeff;
    };
    for (const auto& [dia, coeff] : acc) {
      add(dia, coeff * LaurentPoly::monomial(l.sign, 1));
      TLDiagram prod = dia.compose(e);
      LaurentPoly branch = coeff * LaurentPoly::monomial(-l.sign, 1) *
                           d.pow(static_cast<unsigned>(prod.loops()));
      add(prod.without_loops(), branch);
    }
    acc = std::move(next);
  }

  LaurentPoly bracket(LaurentPoly::Mode::Integer);
  for (const auto& [dia, coeff] : acc) {
    bracket = bracket + coeff * d.pow(static_cast<unsigned>(dia.trace_closure_loops()));
  }
  return bracket;
}

LinkInvariantResult jones(const BraidWord& word, int writhe_sign) {
  if (writhe_sign != 1 && writhe_sign != -1) {
    throw std::invalid_argument("jones: writhe sign flag must be +-1");
  }
  LinkInvariantResult res;
  if (word.letters().size() <= kStatesumMaxLetters) {
    res.bracket = kauffman_bracket_statesum(word);
  } else if (word.strands() <= kTlMaxStrands) {
    res.bracket = kauffman_bracket_tl(word);
  } else {
    throw std::invalid_argument("jones: bracket not computable (too many crossings and strands)");
  }
  res.writhe = word.writhe();
  res.components = word.closure_components();

  auto quotient = divide_by_d(res.bracket);
  if (!quotient) {
    res.exact = false;
    res.jones = LaurentPoly(LaurentPoly::Mode::Integer);
    return res;
  }
  // (-A^3)^(s*w) is the monomial (-1)^(s*w) A^(3*s*w).
  const int m = writhe_sign * res.writhe;
  const BigInt sign = (m % 2 == 0) ? 1 : -1;
  res.jones = *quotient * LaurentPoly::monomial(3 * m, sign);
  return res;
}

}  // namespace slink
