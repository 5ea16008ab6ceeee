#include "qdg/presentation.hpp"

#include <algorithm>
#include <cctype>

namespace qdg {

  Presentation::Presentation(std::vector<Generator> alphabet,
                             std::vector<Relation> relations)
      : _alphabet(std::move(alphabet)), _relations(std::move(relations)) {
    std::sort(_alphabet.begin(), _alphabet.end());
    auto last = std::unique(_alphabet.begin(), _alphabet.end());
    _duplicate_generators = last != _alphabet.end();
    _alphabet.erase(last, _alphabet.end());

    for (auto const& r : _relations) {
      LetterWord lhs, rhs;
      bool ok = true;
      for (auto const& g : r.lhs) {
        auto l = letter(g);
        ok = ok && l.has_value();
        if (l) {
          lhs.push_back(*l);
        }
      }
      for (auto const& g : r.rhs) {
        auto l = letter(g);
        ok = ok && l.has_value();
        if (l) {
          rhs.push_back(*l);
        }
      }
      if (ok) {
        _letter_relations.emplace_back(std::move(lhs), std::move(rhs));
      }
    }
  }

  std::optional<Letter> Presentation::letter(Generator const& g) const {
    auto it = std::lower_bound(_alphabet.begin(), _alphabet.end(), g);
    if (it == _alphabet.end() || *it != g) {
      return std::nullopt;
    }
    return static_cast<Letter>(it - _alphabet.begin());
  }

  LetterWord Presentation::to_letters(Word const& w) const {
    LetterWord out;
    out.reserve(w.size());
    for (auto const& g : w) {
      auto l = letter(g);
      if (!l) {
        throw Error("unknown_letter", "generator '" + g.name + "' is not in the alphabet");
      }
      out.push_back(*l);
    }
    return out;
  }

  Word Presentation::to_word(LetterWord const& w) const {
    Word out;
    out.reserve(w.size());
    for (auto l : w) {
      out.push_back(generator(l));
    }
    return out;
  }

  bool Presentation::relates(LetterWord const& u, LetterWord const& v) const {
    for (auto const& [lhs, rhs] : _letter_relations) {
      if ((lhs == u && rhs == v) || (lhs == v && rhs == u)) {
        return true;
      }
    }
    return false;
  }

  bool Presentation::operator==(Presentation const& other) const {
    return _alphabet == other._alphabet && _relations == other._relations;
  }

  std::size_t count_letter(Word const& w, Generator const& p) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), p));
  }

  Generator const& letter_x() {
    static Generator const x{"x"};
    return x;
  }

  Generator const& letter_a() {
    static Generator const a{"a"};
    return a;
  }

  Word power_word(std::size_t k, std::size_t l) {
    Word w(k, letter_x());
    w.insert(w.end(), l, letter_a());
    return w;
  }

  Presentation make_standard_presentation(StandardKind kind, int n) {
    auto const& x = letter_x();
    auto const& a = letter_a();
    switch (kind) {
      case StandardKind::qv_base:
        return Presentation({x, a}, {Relation{{x}, {x, a, x}}});
      case StandardKind::v_base:
        return Presentation({x}, {Relation{{x}, {x, x}}});
      case StandardKind::n_ary: {
        if (n < 2) {
          throw Error("bad_arity", "n-ary presentation needs n >= 2, got " + std::to_string(n));
        }
        Word rhs(static_cast<std::size_t>(n), x);
        rhs.push_back(a);
        return Presentation({x, a}, {Relation{{x}, rhs}});
      }
    }
    throw Error("bad_kind", "unknown presentation kind");
  }

  PresentationPtr qv_presentation() {
    static PresentationPtr const p
        = std::make_shared<Presentation const>(make_standard_presentation(StandardKind::qv_base));
    return p;
  }

  PresentationPtr v_presentation() {
    static PresentationPtr const p
        = std::make_shared<Presentation const>(make_standard_presentation(StandardKind::v_base));
    return p;
  }

  bool is_valid_generator_name(std::string_view name) {
    if (name.empty()) {
      return false;
    }
    for (unsigned char c : name) {
      // ',' separates generator names in textual word lists
      if (c < 0x21 || c == 0x7f || c == ',') {
        return false;
      }
    }
    return true;
  }

  std::vector<Violation> validate(Presentation const& p) {
    std::vector<Violation> out;
    if (p._duplicate_generators) {
      out.push_back({"duplicate_generator", "alphabet lists a generator more than once"});
    }
    if (p.alphabet().empty()) {
      out.push_back({"empty_alphabet", "alphabet is empty"});
    }
    for (auto const& g : p.alphabet()) {
      if (!is_valid_generator_name(g.name)) {
        out.push_back({"bad_generator_name", "invalid generator name '" + g.name + "'"});
      }
    }
    for (std::size_t i = 0; i < p.relations().size(); ++i) {
      auto const& r = p.relations()[i];
      auto where = "relation " + std::to_string(i);
      if (r.lhs.empty() || r.rhs.empty()) {
        out.push_back({"empty_side", where + " has an empty side"});
      }
      for (auto const* side : {&r.lhs, &r.rhs}) {
        for (auto const& g : *side) {
          if (!p.letter(g)) {
            out.push_back({"unknown_letter", where + " uses '" + g.name + "' outside the alphabet"});
          }
        }
      }
      if (r.lhs == r.rhs) {
        out.push_back({"reflexive_relation", where + " has equal sides"});
      }
    }
    return out;
  }

  Presentation erase_generator(Presentation const& p, Generator const& g) {
    std::vector<Generator> alphabet;
    for (auto const& h : p.alphabet()) {
      if (h != g) {
        alphabet.push_back(h);
      }
    }
    std::vector<Relation> relations;
    for (auto const& r : p.relations()) {
      Relation s;
      std::copy_if(r.lhs.begin(), r.lhs.end(), std::back_inserter(s.lhs),
                   [&g](Generator const& h) { return h != g; });
      std::copy_if(r.rhs.begin(), r.rhs.end(), std::back_inserter(s.rhs),
                   [&g](Generator const& h) { return h != g; });
      relations.push_back(std::move(s));
    }
    return Presentation(std::move(alphabet), std::move(relations));
  }

  Word word_from_chars(std::string_view s) {
    Word w;
    for (char c : s) {
      w.push_back(Generator{std::string(1, c)});
    }
    return w;
  }

  std::string to_string(Word const& w) {
    bool single = std::all_of(w.begin(), w.end(), [](Generator const& g) { return g.name.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!single && i > 0) {
        out += ' ';
      }
      out += w[i].name;
    }
    return out;
  }

}  // namespace qdg
