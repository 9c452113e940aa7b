#include "fcell/word.hpp"

#include <cctype>
#include <sstream>

#include "fcell/error.hpp"

namespace fcell {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (GeneratorIndex i = 0; i < names_.size(); ++i) {
    auto const& n = names_[i];
    if (n.empty() || n == "1" || n.find_first_of(" \t\n\r^") != std::string::npos)
      throw InputError("invalid generator name '" + n + "'");
    if (!index_.emplace(n, i).second)
      throw InputError("duplicate generator name '" + n + "'");
  }
}

std::optional<GeneratorIndex> Alphabet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GeneratorIndex Alphabet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown generator '" + std::string(name) + "'");
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

AlphabetPtr numbered_alphabet(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return make_alphabet(std::move(names));
}

bool same_alphabet(AlphabetPtr const& a, AlphabetPtr const& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

void require_same(AlphabetPtr const& a, AlphabetPtr const& b, char const* op) {
  if (!same_alphabet(a, b)) throw InputError(std::string(op) + ": alphabet mismatch");
}

// Appends one letter to a reduced sequence, cancelling against the tail.
void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
    out.pop_back();
  else
    out.push_back(l);
}

}  // namespace

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw InputError("word without alphabet");
}

Word Word::reduce(AlphabetPtr alphabet, std::span<const Letter> letters) {
  Word w(std::move(alphabet));
  for (auto l : letters) {
    if (l.gen >= w.alphabet_->size()) throw InputError("letter outside alphabet");
    if (l.exp != 1 && l.exp != -1) throw InputError("letter exponent must be +1 or -1");
    push_reduced(w.letters_, l);
  }
  return w;
}

Word Word::generator(AlphabetPtr alphabet, GeneratorIndex gen, int exp) {
  if (exp != 1 && exp != -1) throw InputError("generator exponent must be +1 or -1");
  Letter l{gen, static_cast<std::int8_t>(exp)};
  return reduce(std::move(alphabet), std::span<const Letter>(&l, 1));
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view token = text.substr(start, pos - start);
    if (token == "1") continue;
    std::int8_t exp = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      auto suffix = token.substr(caret + 1);
      if (suffix == "-1")
        exp = -1;
      else if (suffix != "1")
        throw InputError("bad exponent '^" + std::string(suffix) + "' at column " +
                         std::to_string(start + caret + 1) + " in word '" + std::string(text) + "'");
      token = token.substr(0, caret);
    }
    auto gen = alphabet->find(token);
    if (!gen)
      throw InputError("unknown generator '" + std::string(token) + "' at column " +
                       std::to_string(start + 1) + " in word '" + std::string(text) + "'");
    letters.push_back({*gen, exp});
  }
  return reduce(std::move(alphabet), letters);
}

int Word::exponent_sum(GeneratorIndex gen) const {
  int s = 0;
  for (auto l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (auto const& l : letters_) {
    if (!out.empty()) out += ' ';
    out += alphabet_->name(l.gen);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

bool Word::operator==(Word const& other) const {
  return letters_ == other.letters_ && same_alphabet(alphabet_, other.alphabet_);
}

Word multiply(Word const& a, Word const& b) {
  require_same(a.alphabet(), b.alphabet(), "multiply");
  std::vector<Letter> out = a.letters();
  for (auto l : b.letters()) push_reduced(out, l);
  return Word::reduce(a.alphabet(), out);
}

Word inverse(Word const& a) {
  std::vector<Letter> out;
  out.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) out.push_back(it->inverse());
  return Word::reduce(a.alphabet(), out);
}

Word conjugate(Word const& a, Word const& h) {
  require_same(a.alphabet(), h.alphabet(), "conjugate");
  return inverse(h) * a * h;
}

Word commutator(Word const& a, Word const& b) {
  require_same(a.alphabet(), b.alphabet(), "commutator");
  return inverse(a) * inverse(b) * a * b;
}

Word power(Word const& a, int k) {
  Word base = k < 0 ? inverse(a) : a;
  Word out(a.alphabet());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

Word substitute(Word const& w, std::span<const std::optional<Word>> images,
                AlphabetPtr const& target) {
  if (images.size() < w.alphabet()->size())
    throw InputError("substitute: image list shorter than the alphabet");
  std::vector<Letter> out;
  for (auto l : w.letters()) {
    auto const& img = images[l.gen];
    if (!img) throw InputError("substitute: no image for generator '" + w.alphabet()->name(l.gen) + "'");
    require_same(img->alphabet(), target, "substitute");
    if (l.exp > 0) {
      for (auto x : img->letters()) push_reduced(out, x);
    } else {
      for (auto it = img->letters().rbegin(); it != img->letters().rend(); ++it)
        push_reduced(out, it->inverse());
    }
  }
  return Word::reduce(target, out);
}

Word substitute(Word const& w, std::span<const Word> images, AlphabetPtr const& target) {
  std::vector<std::optional<Word>> opt(images.begin(), images.end());
  return substitute(w, opt, target);
}

Word rename_into(Word const& w, AlphabetPtr const& target) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto l : w.letters()) out.push_back({target->index_of(w.alphabet()->name(l.gen)), l.exp});
  return Word::reduce(target, out);
}

}  // namespace fcell
