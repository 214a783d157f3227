#include "covspec/freeword.hpp"

#include <cctype>
#include <sstream>

#include "covspec/error.hpp"

namespace covspec {

FreeWord inverse(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

FreeWord reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l.inverted()) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

FreeWord multiply(const FreeWord& a, const FreeWord& b) {
  FreeWord out = reduce(a);
  for (const auto& l : reduce(b)) {
    if (!out.empty() && out.back() == l.inverted()) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

FreeWord power(const FreeWord& w, long n) {
  FreeWord base = n < 0 ? inverse(w) : w;
  FreeWord out;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out.insert(out.end(), base.begin(), base.end());
  return reduce(out);
}

bool is_reduced(const FreeWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1].inverted()) return false;
  return true;
}

bool is_cyclically_reduced(const FreeWord& w) {
  return is_reduced(w) && (w.size() < 2 || w.front() != w.back().inverted());
}

CyclicSplit cyclic_split(const FreeWord& w) {
  FreeWord r = reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == r[j - 1].inverted()) {
    ++i;
    --j;
  }
  return CyclicSplit{FreeWord(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(i)),
                     FreeWord(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(j))};
}

FreeWord cyclic_reduce(const FreeWord& w) { return cyclic_split(w).core; }

FreeWord rotate(const FreeWord& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  FreeWord r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

FreeWord canonical_cyclic(const FreeWord& w) {
  return std::min(least_rotation(w), least_rotation(inverse(w)));
}

IntVector exponent_sums(const FreeWord& w, std::size_t rank) {
  IntVector v(rank, 0);
  for (const auto& l : w) {
    if (l.generator >= rank) throw InputError("generator x" + std::to_string(l.generator) + " outside rank");
    v[l.generator] += l.inverse ? -1 : 1;
  }
  return v;
}

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (const auto& l : w) {
    if (l.generator >= images.size()) throw InputError("substitute: generator outside image table");
    const FreeWord& img = images[l.generator];
    if (l.inverse) {
      auto inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.insert(out.end(), img.begin(), img.end());
    }
  }
  return reduce(out);
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << w[i].generator;
    if (w[i].inverse) os << "^-1";
  }
  return os.str();
}

FreeWord parse_word(const std::string& text) {
  FreeWord out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    bool inv = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    if (tok.size() == 1 && std::islower(static_cast<unsigned char>(tok[0]))) {
      out.push_back(Letter{static_cast<std::uint32_t>(tok[0] - 'a'), inv});
      continue;
    }
    if (tok.size() < 2 || tok[0] != 'x' ||
        !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw InputError("bad word token '" + tok + "'");
    out.push_back(Letter{static_cast<std::uint32_t>(std::stoul(tok.substr(1))), inv});
  }
  return out;
}

}  // namespace covspec
