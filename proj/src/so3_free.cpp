#include "expkit/so3_free.hpp"

#include <array>
#include <map>

#include "expkit/graph.hpp"

namespace expkit {

Letter inverse(Letter l) {
  switch (l) {
    case Letter::A: return Letter::A_inv;
    case Letter::A_inv: return Letter::A;
    case Letter::B: return Letter::B_inv;
    case Letter::B_inv: return Letter::B;
  }
  return l;
}

char letter_symbol(Letter l) {
  switch (l) {
    case Letter::A: return 'a';
    case Letter::A_inv: return 'A';
    case Letter::B: return 'b';
    case Letter::B_inv: return 'B';
  }
  return '?';
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == inverse(w[i])) return false;
  return true;
}

std::string to_string(const Word& w) {
  std::string s;
  for (Letter l : w) s += letter_symbol(l);
  return s;
}

Word parse_word(const std::string& text) {
  Word w;
  for (char c : text) {
    switch (c) {
      case 'a': w.push_back(Letter::A); break;
      case 'A': w.push_back(Letter::A_inv); break;
      case 'b': w.push_back(Letter::B); break;
      case 'B': w.push_back(Letter::B_inv); break;
      default: throw ContractError(std::string("unknown letter '") + c + "'");
    }
  }
  return w;
}

void ScaledVector::canonicalize() {
  while (k > 0 && x % 3 == 0 && y % 3 == 0 && z % 3 == 0) {
    x /= 3;
    y /= 3;
    z /= 3;
    --k;
  }
}

namespace {

// Shared by the exact and residue walks.
template <class T>
void step(Letter l, T& x, T& y, T& z) {
  T nx = x, ny = y, nz = z;
  switch (l) {
    case Letter::A: nx = 3 * x; ny = y - 2 * z; nz = z + 4 * y; break;
    case Letter::A_inv: nx = 3 * x; ny = y + 2 * z; nz = z - 4 * y; break;
    case Letter::B: nx = x - 4 * y; ny = y + 2 * x; nz = 3 * z; break;
    case Letter::B_inv: nx = x + 4 * y; ny = y - 2 * x; nz = 3 * z; break;
  }
  x = nx;
  y = ny;
  z = nz;
}

bool is_a(Letter l) { return l == Letter::A || l == Letter::A_inv; }

}  // namespace

ScaledVector apply_letter_raw(Letter l, const ScaledVector& v) {
  ScaledVector out = v;
  step(l, out.x, out.y, out.z);
  ++out.k;
  return out;
}

ScaledVector apply_letter(Letter l, const ScaledVector& v) {
  auto out = apply_letter_raw(l, v);
  out.canonicalize();
  return out;
}

ScaledVector evaluate_word_raw(const Word& w) {
  if (!is_reduced(w)) throw ContractError("word " + to_string(w) + " is not reduced");
  auto v = ScaledVector::e1();
  for (std::size_t i = w.size(); i-- > 0;) v = apply_letter_raw(w[i], v);
  return v;
}

ScaledVector evaluate_word(const Word& w) {
  auto v = evaluate_word_raw(w);
  v.canonicalize();
  return v;
}

namespace {

constexpr std::array<Letter, 4> kLetters{Letter::A, Letter::A_inv, Letter::B, Letter::B_inv};

int mod3(long long v) { return static_cast<int>(((v % 3) + 3) % 3); }

// `outer` is the most recently applied (leftmost) letter; the word is held reversed.
struct ExactWalk {
  int max_length;
  FreenessCertificate& cert;
  std::vector<Letter> reversed;

  bool ok(Letter last, const ScaledVector& v) const {
    if (v.y % 3 == 0) return false;
    return is_a(last) ? v.x % 3 == 0 : v.z % 3 == 0;
  }

  void fail() {
    cert.passed = false;
    cert.failure = Word(reversed.rbegin(), reversed.rend());
  }

  void visit(Letter outer, const ScaledVector& v) {
    ++cert.words_checked;
    if (!ok(outer, v)) {
      fail();
      return;
    }
    if (static_cast<int>(reversed.size()) == max_length) return;
    for (Letter l : kLetters) {
      if (l == inverse(outer)) continue;
      reversed.push_back(l);
      visit(l, apply_letter_raw(l, v));
      reversed.pop_back();
      if (!cert.passed) return;
    }
  }
};

FreenessCertificate certify_exact(int max_length) {
  FreenessCertificate cert;
  cert.max_length = max_length;
  cert.mode = CertifyMode::exact;
  ExactWalk walk{max_length, cert, {}};
  for (Letter first : {Letter::B, Letter::B_inv}) {
    walk.reversed = {first};
    walk.visit(first, apply_letter_raw(first, ScaledVector::e1()));
    if (!cert.passed) break;
  }
  return cert;
}

struct ResidueState {
  int x, y, z;
  Letter outer;
  friend auto operator<=>(const ResidueState&, const ResidueState&) = default;
};

struct ResidueInfo {
  std::uint64_t count = 0;
  std::vector<Letter> reversed;  // one witness word reaching the state
};

FreenessCertificate certify_residue(int max_length) {
  FreenessCertificate cert;
  cert.max_length = max_length;
  cert.mode = CertifyMode::residue;
  std::map<ResidueState, ResidueInfo> layer;
  for (Letter first : {Letter::B, Letter::B_inv}) {
    long long x = 1, y = 0, z = 0;
    step(first, x, y, z);
    ResidueState s{mod3(x), mod3(y), mod3(z), first};
    auto& info = layer[s];
    info.count += 1;
    info.reversed = {first};
  }
  for (int depth = 1; depth <= max_length; ++depth) {
    for (const auto& [s, info] : layer) {
      cert.words_checked += info.count;
      bool good = s.y != 0 && (is_a(s.outer) ? s.x == 0 : s.z == 0);
      if (!good) {
        cert.passed = false;
        cert.failure = Word(info.reversed.rbegin(), info.reversed.rend());
        return cert;
      }
    }
    if (depth == max_length) break;
    std::map<ResidueState, ResidueInfo> next;
    for (const auto& [s, info] : layer) {
      for (Letter l : kLetters) {
        if (l == inverse(s.outer)) continue;
        long long x = s.x, y = s.y, z = s.z;
        step(l, x, y, z);
        ResidueState t{mod3(x), mod3(y), mod3(z), l};
        auto& target = next[t];
        if (target.count == 0) {
          target.reversed = info.reversed;
          target.reversed.push_back(l);
        }
        target.count += info.count;
      }
    }
    layer = std::move(next);
  }
  return cert;
}

}  // namespace

FreenessCertificate certify_free(int max_length, CertifyMode mode) {
  if (max_length < 1) throw ContractError("certify_free needs a positive length");
  if (mode == CertifyMode::residue && max_length > 39)
    throw ContractError("residue word counts overflow beyond length 39");
  return mode == CertifyMode::exact ? certify_exact(max_length) : certify_residue(max_length);
}

}  // namespace expkit
