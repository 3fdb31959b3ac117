#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace expkit {

using BigInt = boost::multiprecision::cpp_int;

enum class Letter { A, A_inv, B, B_inv };

Letter inverse(Letter l);
char letter_symbol(Letter l);

/// Letters C1 C2 ... Cm; the word acts as C1(C2(...(Cm(v)))).
using Word = std::vector<Letter>;

bool is_reduced(const Word& w);
std::string to_string(const Word& w);
/// Inverse of to_string: letters "a", "A" (= a^-1), "b", "B".
Word parse_word(const std::string& text);

/// 3^-k (x, y sqrt2, z).
struct ScaledVector {
  int k = 0;
  BigInt x, y, z;

  static ScaledVector e1() { return {0, 1, 0, 0}; }
  /// Divides out common factors of 3 while k > 0.
  void canonicalize();
  friend bool operator==(const ScaledVector&, const ScaledVector&) = default;
};

/// Raw update, exponent + 1, no canonical reduction.
ScaledVector apply_letter_raw(Letter l, const ScaledVector& v);
ScaledVector apply_letter(Letter l, const ScaledVector& v);

/// w(e1) before canonical reduction (exponent |w|). Throws ContractError on unreduced words.
ScaledVector evaluate_word_raw(const Word& w);
ScaledVector evaluate_word(const Word& w);

enum class CertifyMode { exact, residue };

struct FreenessCertificate {
  int max_length = 0;
  CertifyMode mode = CertifyMode::exact;
  /// Reduced words of length <= max_length ending in B or B^-1.
  std::uint64_t words_checked = 0;
  bool passed = true;
  /// First word found with y = 0 (mod 3) or a broken divisibility invariant.
  std::optional<Word> failure;
};

/**
 * Checks y(w(e1)) != 0 (mod 3) for every reduced word w of length <= L whose last
 * letter is B^{+-1}. Exact mode walks every word with exact integers; residue mode
 * tracks (x, y, z) mod 3 per depth, which makes large L feasible.
 */
FreenessCertificate certify_free(int max_length, CertifyMode mode = CertifyMode::exact);

}  // namespace expkit
