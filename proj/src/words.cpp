#include "holoq/words.hpp"

#include "holoq/errors.hpp"

#include <cctype>

namespace holoq {

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const PermGroup& g) : text_(text), g_(g) {}

  Word parse() {
    Word w = parse_product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::InvalidInput, "word '" + std::string(text_) + "': " + what);
  }

  static Word invert(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) l.inverse = !l.inverse;
    return out;
  }

  static Word raise(const Word& w, long long k) {
    const Word base = k < 0 ? invert(w) : w;
    Word out;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  Word parse_product() {
    Word w;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ',' || text_[pos_] == ']' || text_[pos_] == ')' || text_[pos_] == '=')
        return w;
      for (const Word& f : parse_factor()) w.insert(w.end(), f.begin(), f.end());
    }
  }

  // A factor may expand to several atoms when a letter run is split.
  std::vector<Word> parse_factor() {
    std::vector<Word> atoms = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string num(text_.substr(start, pos_ - start));
      if (num.empty() || num == "-" || num == "+") fail("missing exponent");
      atoms.back() = raise(atoms.back(), std::stoll(num));
    }
    return atoms;
  }

  std::vector<Word> parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = parse_product();
      expect(')');
      return {inner};
    }
    if (c == '[') {
      ++pos_;
      Word x = parse_product();
      expect(',');
      Word y = parse_product();
      expect(']');
      Word out = invert(x);
      const Word yi = invert(y);
      out.insert(out.end(), yi.begin(), yi.end());
      out.insert(out.end(), x.begin(), x.end());
      out.insert(out.end(), y.begin(), y.end());
      return {out};
    }
    if (c == '1') {
      ++pos_;
      return {Word{}};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (auto idx = g_.generator_index(name)) return {Word{Letter{*idx, false}}};
      std::vector<Word> letters;
      for (char ch : name) {
        auto idx = g_.generator_index(std::string_view(&ch, 1));
        if (!idx) throw Error(ErrorKind::UnknownGeneratorName, "'" + std::string(name) + "' is not a generator name");
        letters.push_back(Word{Letter{*idx, false}});
      }
      return letters;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  const PermGroup& g_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const PermGroup& g) { return WordParser(text, g).parse(); }

ElementId evaluate(const PermGroup& g, const Word& w) {
  ElementId x = PermGroup::identity();
  for (const Letter& l : w) {
    const ElementId s = g.generator(l.generator);
    x = g.mul(x, l.inverse ? g.inverse(s) : s);
  }
  return x;
}

RelationCheck verify_relations(const PermGroup& g, std::span<const std::string> relations) {
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const std::string& rel = relations[i];
    const auto eq = rel.find('=');
    const Word lhs = parse_word(rel.substr(0, eq), g);
    const Word rhs = eq == std::string::npos ? Word{} : parse_word(rel.substr(eq + 1), g);
    const ElementId l = evaluate(g, lhs), r = evaluate(g, rhs);
    if (l != r)
      return {false, i, "relation '" + rel + "' fails: lhs = " + g.word_name(l) + ", rhs = " + g.word_name(r)};
  }
  return {};
}

}  // namespace holoq
