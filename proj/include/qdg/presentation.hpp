#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdg/error.hpp"

namespace qdg {

  // A wire label. Names are arbitrary non-whitespace tokens, so words are
  // always kept as sequences of generators rather than flat strings.
  struct Generator {
    std::string name;

    auto operator<=>(Generator const&) const = default;
  };

  using Word = std::vector<Generator>;

  // Index of a generator within a presentation's (sorted) alphabet.
  using Letter = std::uint32_t;
  using LetterWord = std::vector<Letter>;

  struct Relation {
    Word lhs;
    Word rhs;

    bool operator==(Relation const&) const = default;
  };

  enum class StandardKind { qv_base, v_base, n_ary };

  // A semigroup presentation <alphabet | relations>. The alphabet is kept
  // sorted and deduplicated; relations keep their input order and direction.
  // Construction never throws on invariant violations; use validate().
  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::vector<Generator> alphabet, std::vector<Relation> relations);

    std::vector<Generator> const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }

    std::optional<Letter> letter(Generator const& g) const;
    Generator const& generator(Letter l) const {
      return _alphabet.at(l);
    }

    // Throws Error("unknown_letter") for generators outside the alphabet.
    LetterWord to_letters(Word const& w) const;
    Word to_word(LetterWord const& w) const;

    // True iff (u,v) or (v,u) is a relation.
    bool relates(LetterWord const& u, LetterWord const& v) const;

    bool operator==(Presentation const& other) const;

   private:
    std::vector<Generator> _alphabet;
    std::vector<Relation> _relations;
    // relations in letter form, only those whose letters all resolve
    std::vector<std::pair<LetterWord, LetterWord>> _letter_relations;
    bool _duplicate_generators = false;

    friend std::vector<Violation> validate(Presentation const& p);
  };

  using PresentationPtr = std::shared_ptr<Presentation const>;

  // |w|_p
  std::size_t count_letter(Word const& w, Generator const& p);

  // <x,a | x = xax>, <x | x = x^2>, or <x,a | x = x^n a> (n >= 2).
  Presentation make_standard_presentation(StandardKind kind, int n = 2);

  // Shared instances of the two presentations used everywhere.
  PresentationPtr qv_presentation();
  PresentationPtr v_presentation();

  std::vector<Violation> validate(Presentation const& p);

  // Presentation obtained by deleting p from the alphabet and from both sides
  // of every relation. The result may be invalid (empty or equal sides).
  Presentation erase_generator(Presentation const& p, Generator const& g);

  bool is_valid_generator_name(std::string_view name);

  // Splits a string into single-character generators: "xax" -> [x, a, x].
  Word word_from_chars(std::string_view s);
  // Joins names; single-character alphabets give "xax", otherwise "x1 x2".
  std::string to_string(Word const& w);

  Generator const& letter_x();
  Generator const& letter_a();

  // x^k a^l
  Word power_word(std::size_t k, std::size_t l);

}  // namespace qdg
