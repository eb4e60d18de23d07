#include "tmsets/word.hpp"

#include <mutex>
#include <stdexcept>

namespace tmsets {

namespace {

// Longest prefix length any caller may request. 2^26 letters = 64 MiB.
constexpr size_t kMaxWordLength = size_t{1} << 26;

std::string complemented(const std::string& w) {
  std::string out = w;
  for (char& c : out) c = (c == '0') ? '1' : '0';
  return out;
}

std::mutex g_prefix_mutex;
std::string g_prefix_cache = "0";

}  // namespace

BinaryWord tm_prefix(size_t length) {
  if (length == 0) return {};
  if (length > kMaxWordLength) {
    throw std::invalid_argument("tm_prefix: length exceeds 2^26 letters");
  }
  std::lock_guard<std::mutex> lock(g_prefix_mutex);
  while (g_prefix_cache.size() < length) {
    g_prefix_cache += complemented(g_prefix_cache);
  }
  return g_prefix_cache.substr(0, length);
}

BinaryWord tmbar_prefix(size_t length) { return complemented(tm_prefix(length)); }

BinaryWord apply_morphism(const BinaryWord& w, uint32_t iterations) {
  if (!is_bit_string(w)) {
    throw std::invalid_argument("apply_morphism: word must be a 01-string");
  }
  if (iterations >= 64 || (w.size() << iterations) > kMaxWordLength) {
    throw std::invalid_argument("apply_morphism: result exceeds 2^26 letters");
  }
  BinaryWord cur = w;
  for (uint32_t it = 0; it < iterations; ++it) {
    BinaryWord next;
    next.reserve(cur.size() * 2);
    for (char c : cur) {
      next += (c == '0') ? "01" : "10";
    }
    cur = std::move(next);
  }
  return cur;
}

bool is_factor(const BinaryWord& u) {
  if (u.empty()) throw std::invalid_argument("is_factor: empty word rejected");
  if (!is_bit_string(u)) {
    throw std::invalid_argument("is_factor: word must be a 01-string");
  }
  size_t window = kFactorWindowScale * u.size() + kFactorWindowPad;
  return tm_prefix(window).find(u) != std::string::npos;
}

bool is_prefix_of_t(const BinaryWord& u) {
  if (u.empty()) throw std::invalid_argument("is_prefix_of_t: empty word");
  return tm_prefix(u.size()) == u;
}

bool is_prefix_of_tbar(const BinaryWord& u) {
  if (u.empty()) throw std::invalid_argument("is_prefix_of_tbar: empty word");
  return tmbar_prefix(u.size()) == u;
}

Factor::Factor(BinaryWord letters) : word_(std::move(letters)) {
  if (!is_factor(word_)) {
    throw std::invalid_argument("Factor: \"" + word_ +
                                "\" is not a factor of the Thue-Morse word");
  }
}

}  // namespace tmsets
