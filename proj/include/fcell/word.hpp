#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fcell {

using GeneratorIndex = std::uint32_t;

/// An ordered set of uniquely named free generators.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  std::string const& name(GeneratorIndex i) const { return names_.at(i); }
  std::vector<std::string> const& names() const { return names_; }

  std::optional<GeneratorIndex> find(std::string_view name) const;
  /// Throws InputError for an unknown name.
  GeneratorIndex index_of(std::string_view name) const;

  bool operator==(Alphabet const& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, GeneratorIndex, std::less<>> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);
/// prefix1, prefix2, ..., prefixN
AlphabetPtr numbered_alphabet(std::string_view prefix, std::size_t count);
bool same_alphabet(AlphabetPtr const& a, AlphabetPtr const& b);

struct Letter {
  GeneratorIndex gen = 0;
  std::int8_t exp = 1;  // +1 or -1

  bool operator==(Letter const&) const = default;
  Letter inverse() const { return {gen, static_cast<std::int8_t>(-exp)}; }
};

/// A freely reduced word in the free group on an alphabet.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(AlphabetPtr alphabet, std::span<const Letter> letters);
  static Word generator(AlphabetPtr alphabet, GeneratorIndex gen, int exp = 1);
  /// Whitespace separated tokens `name` or `name^-1`; `1` or empty is the identity.
  static Word parse(AlphabetPtr alphabet, std::string_view text);

  AlphabetPtr const& alphabet() const { return alphabet_; }
  std::vector<Letter> const& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  /// Sum of exponents of one generator.
  int exponent_sum(GeneratorIndex gen) const;
  std::string to_string() const;

  bool operator==(Word const& other) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

Word multiply(Word const& a, Word const& b);
Word inverse(Word const& a);
/// h^-1 a h
Word conjugate(Word const& a, Word const& h);
/// a^-1 b^-1 a b
Word commutator(Word const& a, Word const& b);
Word power(Word const& a, int k);

inline Word operator*(Word const& a, Word const& b) { return multiply(a, b); }

/// Homomorphic image of w; images[g] is the image of generator g. All images
/// must share the target alphabet. Missing (nullopt) images raise InputError.
Word substitute(Word const& w, std::span<const std::optional<Word>> images,
                AlphabetPtr const& target);
Word substitute(Word const& w, std::span<const Word> images, AlphabetPtr const& target);

/// Same letters read in another alphabet with the same generator names
/// (by name lookup).
Word rename_into(Word const& w, AlphabetPtr const& target);

}  // namespace fcell
