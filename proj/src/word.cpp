#include "permrel/word.hpp"

#include <cctype>
#include <sstream>

#include "permrel/errors.hpp"

namespace permrel {

bool is_freely_reduced(const std::vector<int>& letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i] == -letters[i + 1]) return false;
  return true;
}

SignedWord reduce(const SignedWord& w) {
  std::vector<int> out;
  out.reserve(w.letters.size());
  for (int x : w.letters) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return SignedWord{std::move(out), true};
}

SignedWord inverse(const SignedWord& w) {
  std::vector<int> out;
  out.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.push_back(-*it);
  return SignedWord{std::move(out), w.reduced};
}

SignedWord concat(const SignedWord& a, const SignedWord& b) {
  std::vector<int> out = a.letters;
  out.insert(out.end(), b.letters.begin(), b.letters.end());
  bool red = is_freely_reduced(out);
  return SignedWord{std::move(out), red};
}

SignedWord to_signed(const PosWord& w) {
  return SignedWord{w, true};
}

namespace {

std::vector<std::string> tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int parse_index(const std::string& digits, int n, const std::string& tok) {
  if (digits.empty()) throw ParseError("bad word token '" + tok + "'");
  for (char c : digits)
    if (std::isdigit(static_cast<unsigned char>(c)) == 0)
      throw ParseError("bad word token '" + tok + "'");
  int v = std::stoi(digits);
  if (v < 1 || v > n)
    throw ParseError("letter index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return v;
}

}  // namespace

PosWord parse_pos_word(const std::string& text, int n) {
  PosWord w;
  for (const std::string& t : tokens(text)) {
    if (t == "e") continue;  // explicit empty word
    std::string body = t;
    if (body.size() > 1 && (body[0] == 'x' || body[0] == 'X')) body = body.substr(1);
    w.push_back(parse_index(body, n, t));
  }
  return w;
}

SignedWord parse_signed_word(const std::string& text, int n) {
  SignedWord w;
  for (const std::string& t : tokens(text)) {
    if (t == "e") continue;
    std::string body = t;
    int sign = 1;
    auto caret = body.find('^');
    if (caret != std::string::npos) {
      std::string exp = body.substr(caret + 1);
      body = body.substr(0, caret);
      if (exp == "-1")
        sign = -1;
      else if (exp == "+1" || exp == "1")
        sign = 1;
      else
        throw ParseError("bad exponent in token '" + t + "' (only ^-1 and ^+1)");
    }
    if (!body.empty() && (body[0] == 'x' || body[0] == 'X')) {
      body = body.substr(1);
    } else if (!body.empty() && body[0] == '-') {
      sign = -sign;
      body = body.substr(1);
    }
    w.letters.push_back(sign * parse_index(body, n, t));
  }
  w.reduced = is_freely_reduced(w.letters);
  return w;
}

std::string format_pos_word(const PosWord& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << 'x' << w[i];
  }
  return out.str();
}

std::string format_signed_word(const SignedWord& w) {
  if (w.letters.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << ' ';
    int x = w.letters[i];
    out << 'x' << (x > 0 ? x : -x);
    if (x < 0) out << "^-1";
  }
  return out.str();
}

}  // namespace permrel
