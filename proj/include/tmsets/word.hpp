#pragma once

#include <cstdint>
#include <string>

#include "tmsets/nat.hpp"

namespace tmsets {

// A finite word over {0,1}, stored as a string of '0'/'1' characters.
using BinaryWord = std::string;

// Letter t_n of the Thue-Morse word, computed by the digit-parity automaton:
// t_n = (sum of binary digits of n) mod 2.
constexpr int tm_letter(Nat n) { return parity_of_support(n); }

// The first `length` letters of T, built by the doubling recurrence
// w -> w . complement(w) starting from "0". Deliberately independent of
// tm_letter so the two generation routes can cross-validate each other.
BinaryWord tm_prefix(size_t length);

// Letterwise complement of tm_prefix: the morphism's fixed point starting in 1.
BinaryWord tmbar_prefix(size_t length);

// tau^iterations(w) for the morphism 0 -> 01, 1 -> 10.
BinaryWord apply_morphism(const BinaryWord& w, uint32_t iterations);

// Uniform recurrence of T means every factor of length L occurs somewhere in
// the first kFactorWindowScale*L + kFactorWindowPad positions; the scale is
// deliberately generous. Adjust here if the window ever needs auditing.
inline constexpr size_t kFactorWindowScale = 32;
inline constexpr size_t kFactorWindowPad = 64;

// True iff u occurs in T, decided by scanning the prefix window above.
// Rejects the empty word.
bool is_factor(const BinaryWord& u);

bool is_prefix_of_t(const BinaryWord& u);
bool is_prefix_of_tbar(const BinaryWord& u);

// A nonempty binary word verified at construction to occur in T.
class Factor {
 public:
  explicit Factor(BinaryWord letters);

  const BinaryWord& word() const { return word_; }
  size_t size() const { return word_.size(); }
  char operator[](size_t i) const { return word_[i]; }

  bool operator==(const Factor& other) const { return word_ == other.word_; }

 private:
  BinaryWord word_;
};

}  // namespace tmsets
