#include "avalanche/formats.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace avalanche {

namespace {

constexpr uint8_t kRev4[16] = {0x0, 0x8, 0x4, 0xc, 0x2, 0xa, 0x6, 0xe,
                               0x1, 0x9, 0x5, 0xd, 0x3, 0xb, 0x7, 0xf};

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// sorted for printing: by degree, then by variable tuple
std::vector<uint32_t> print_order(const Anf& a) {
  std::vector<uint32_t> monos(a.monomials.begin(), a.monomials.end());
  std::sort(monos.begin(), monos.end(), [](uint32_t x, uint32_t y) {
    int wx = hamming_weight(x), wy = hamming_weight(y);
    if (wx != wy) return wx < wy;
    // lexicographic on ascending variable lists = smaller lowest set bit first
    while (x && y) {
      uint32_t lx = x & -x, ly = y & -y;
      if (lx != ly) return lx < ly;
      x ^= lx;
      y ^= ly;
    }
    return x < y;
  });
  return monos;
}

}  // namespace

std::string to_hex(const BooleanFunction& f) {
  if (f.num_vars() < 2)
    throw std::invalid_argument("hex rendering needs n >= 2");
  std::string out = "n=" + std::to_string(f.num_vars()) + ":";
  for (uint64_t j = 0; j < f.size() / 4; ++j) {
    uint8_t packed = (f.words()[j >> 4] >> ((j & 15) * 4)) & 0xF;
    out += "0123456789abcdef"[kRev4[packed]];
  }
  return out;
}

BooleanFunction parse_hex(std::string_view text) {
  std::string_view s = trimmed(text);
  if (s.substr(0, 2) != "n=") throw parse_error("hex input must start with \"n=<k>:\"");
  s.remove_prefix(2);
  size_t colon = s.find(':');
  if (colon == std::string_view::npos) throw parse_error("missing ':' after variable count");
  int n = 0;
  if (colon == 0 || colon > 2) throw parse_error("bad variable count");
  for (size_t i = 0; i < colon; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("bad variable count");
    n = n * 10 + (s[i] - '0');
  }
  if (n < 2 || n > kMaxVars)
    throw range_error("variable count out of supported range 2..24");
  s.remove_prefix(colon + 1);
  uint64_t digits = (uint64_t{1} << n) / 4;
  if (s.size() != digits)
    throw parse_error("expected " + std::to_string(digits) + " hex digits");
  BooleanFunction f(n);
  std::vector<uint64_t> w(f.words().size(), 0);
  for (uint64_t j = 0; j < digits; ++j) {
    int d = hex_digit(s[j]);
    if (d < 0) throw parse_error("invalid hex digit");
    w[j >> 4] |= uint64_t{kRev4[d]} << ((j & 15) * 4);
  }
  return BooleanFunction::from_words(n, std::move(w));
}

std::string to_anf_string(const Anf& a) {
  if (a.monomials.empty()) return "0";
  std::string out;
  for (uint32_t m : print_order(a)) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += "1";
      continue;
    }
    for (int j = 0; j < a.n; ++j)
      if ((m >> j) & 1) out += "x" + std::to_string(j + 1);
  }
  return out;
}

Anf parse_anf_string(std::string_view text, int n) {
  if (n < 1 || n > kMaxVars)
    throw range_error("variable count out of supported range");
  Anf a;
  a.n = n;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  bool expect_term = true;
  bool any_term = false;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (!expect_term) {
      if (text[i] != '+') throw parse_error("expected '+' between terms");
      ++i;
      expect_term = true;
      continue;
    }
    // one term: '0' | '1' | product of x<k> with optional '*'
    uint32_t mono = 0;
    bool zero_term = false;
    bool saw_factor = false;
    bool pending_star = false;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        if (!saw_factor || pending_star) throw parse_error("dangling '*'");
        pending_star = true;
        ++i;
        continue;
      }
      if (i < text.size() && (text[i] == '1' || text[i] == '0') && !saw_factor) {
        zero_term = text[i] == '0';
        ++i;
        saw_factor = true;
        // constants stand alone in a term
        skip_ws();
        if (i < text.size() && text[i] != '+')
          throw parse_error("constant must be a whole term");
        break;
      }
      if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw parse_error("expected variable index after 'x'");
        int idx = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          idx = idx * 10 + (text[i] - '0');
          ++i;
          if (idx > kMaxVars) break;
        }
        if (idx < 1 || idx > n)
          throw parse_error("variable index out of range: x" + std::to_string(idx));
        mono |= uint32_t{1} << (idx - 1);
        saw_factor = true;
        pending_star = false;
        continue;
      }
      break;
    }
    if (!saw_factor) throw parse_error("empty term");
    if (pending_star) throw parse_error("dangling '*'");
    if (!zero_term) {
      // XOR semantics: a repeated monomial cancels
      auto [it, inserted] = a.monomials.insert(mono);
      if (!inserted) a.monomials.erase(it);
    }
    expect_term = false;
    any_term = true;
  }
  if (!any_term) throw parse_error("empty input");
  if (expect_term) throw parse_error("trailing '+'");
  return a;
}

std::string to_block_string(const BlockSequence& bs) {
  std::string out;
  for (const BlockLetter& b : bs.blocks) {
    if (!out.empty()) out += ' ';
    if (b.complemented) out += '~';
    out += b.symbol();
  }
  return out;
}

BlockSequence parse_block_string(std::string_view text) {
  BlockSequence bs;
  bool pending_complement = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '~') {
      if (pending_complement) throw parse_error("doubled '~'");
      pending_complement = true;
      continue;
    }
    BlockBase base;
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'A': base = BlockBase::A; break;
      case 'B': base = BlockBase::B; break;
      case 'C': base = BlockBase::C; break;
      case 'D': base = BlockBase::D; break;
      case 'U': base = BlockBase::U; break;
      case 'V': base = BlockBase::V; break;
      case 'X': base = BlockBase::X; break;
      case 'Y': base = BlockBase::Y; break;
      default:
        throw parse_error(std::string("invalid block letter '") + c + "'");
    }
    bs.blocks.push_back({base, pending_complement});
    pending_complement = false;
  }
  if (pending_complement) throw parse_error("trailing '~'");
  uint64_t count = bs.blocks.size();
  if (count == 0) throw parse_error("empty block string");
  if ((count & (count - 1)) != 0)
    throw parse_error("block count must be a power of two");
  int n = 2;
  while ((uint64_t{1} << (n - 2)) < count) ++n;
  if (n > kMaxVars) throw range_error("block string longer than n = 24 allows");
  bs.n = n;
  return bs;
}

}  // namespace avalanche
