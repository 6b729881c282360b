#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pdstile/algebra/matrix.hpp"
#include "pdstile/algebra/perron.hpp"

namespace pdstile {

using Letter = int;
using Word = std::vector<Letter>;
using Abelian = std::vector<std::int64_t>;

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw InputError("alphabet must have at least one letter");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw InputError("empty letter name");
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j]) throw InputError("duplicate letter name '" + names_[i] + "'");
        }
    }
    /// {"1", ..., "d"}
    static Alphabet numeric(int d) {
        if (d < 1) throw InputError("alphabet size must be positive");
        std::vector<std::string> n;
        for (int i = 1; i <= d; ++i) n.push_back(std::to_string(i));
        return Alphabet(std::move(n));
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(Letter a) const { return names_.at(static_cast<std::size_t>(a)); }
    const std::vector<std::string>& names() const { return names_; }

    Letter index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<Letter>(i);
        throw InputError("letter '" + std::string(name) + "' is not in the alphabet");
    }

    bool single_char_names() const {
        for (const auto& n : names_)
            if (n.size() != 1) return false;
        return true;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
};

/// Reads a word. Single-character alphabets take one letter per character;
/// otherwise letters are separated by spaces or commas.
inline Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word w;
    const bool split = !alphabet.single_char_names() || text.find_first_of(" ,") != std::string_view::npos;
    if (!split) {
        for (char c : text) w.push_back(alphabet.index_of(std::string_view(&c, 1)));
        return w;
    }
    std::string token;
    auto flush = [&] {
        if (!token.empty()) w.push_back(alphabet.index_of(token));
        token.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == ',')
            flush();
        else
            token.push_back(c);
    }
    flush();
    return w;
}

inline std::string format_word(const Alphabet& alphabet, const Word& w) {
    std::string out;
    const bool sep = !alphabet.single_char_names();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (sep && i) out += ' ';
        out += alphabet.name(w[i]);
    }
    return out;
}

inline Abelian abelianize(const Word& w, int d) {
    Abelian v(static_cast<std::size_t>(d), 0);
    for (Letter a : w) {
        if (a < 0 || a >= d) throw InputError("letter index out of range");
        ++v[static_cast<std::size_t>(a)];
    }
    return v;
}

class Substitution {
public:
    Substitution(Alphabet alphabet, std::vector<Word> images) : alphabet_(std::move(alphabet)), images_(std::move(images)) {
        const int d = alphabet_.size();
        if (static_cast<int>(images_.size()) != d) throw InputError("one image per letter required");
        for (int a = 0; a < d; ++a) {
            if (images_[static_cast<std::size_t>(a)].empty())
                throw InputError("image of '" + alphabet_.name(a) + "' is empty");
            for (Letter b : images_[static_cast<std::size_t>(a)])
                if (b < 0 || b >= d) throw InputError("image of '" + alphabet_.name(a) + "' uses a foreign letter");
        }
        incidence_ = IntMatrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            for (Letter i : images_[static_cast<std::size_t>(j)]) incidence_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += 1;
    }

    /// Rules written with letter names, e.g. {"ab", "a"}.
    static Substitution from_strings(const Alphabet& alphabet, const std::vector<std::string>& rules) {
        std::vector<Word> images;
        for (const auto& r : rules) images.push_back(parse_word(alphabet, r));
        return Substitution(alphabet, std::move(images));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    int size() const { return alphabet_.size(); }
    const Word& image(Letter a) const { return images_.at(static_cast<std::size_t>(a)); }
    const std::vector<Word>& images() const { return images_; }
    const IntMatrix& incidence() const { return incidence_; }

    Word apply(const Word& w) const {
        Word out;
        for (Letter a : w) {
            if (a < 0 || a >= size()) throw InputError("apply: foreign letter");
            const Word& img = images_[static_cast<std::size_t>(a)];
            out.insert(out.end(), img.begin(), img.end());
        }
        return out;
    }

    Word apply_power(Word w, int k, std::size_t max_length = 100000000) const {
        for (int i = 0; i < k; ++i) {
            w = apply(w);
            if (w.size() > max_length) throw DomainError("word length guard exceeded");
        }
        return w;
    }

    std::string to_string() const {
        std::string s;
        for (int a = 0; a < size(); ++a) {
            if (a) s += ", ";
            s += alphabet_.name(a) + "→" + format_word(alphabet_, images_[static_cast<std::size_t>(a)]);
        }
        return s;
    }

    friend bool operator==(const Substitution& a, const Substitution& b) {
        return a.alphabet_ == b.alphabet_ && a.images_ == b.images_;
    }

private:
    Alphabet alphabet_;
    std::vector<Word> images_;
    IntMatrix incidence_;
};

inline Word apply(const Substitution& s, const Word& w) { return s.apply(w); }
inline IntMatrix incidence(const Substitution& s) { return s.incidence(); }
inline bool is_primitive(const Substitution& s) { return is_primitive_matrix(s.incidence()); }

/// (s1 ∘ s2)(a) = s1(s2(a)).
inline Substitution compose(const Substitution& s1, const Substitution& s2) {
    if (s1.alphabet() != s2.alphabet()) throw InputError("compose: alphabet mismatch");
    std::vector<Word> images;
    for (int a = 0; a < s2.size(); ++a) images.push_back(s1.apply(s2.image(a)));
    return Substitution(s1.alphabet(), std::move(images));
}

inline Substitution identity_substitution(const Alphabet& alphabet) {
    std::vector<Word> images;
    for (int a = 0; a < alphabet.size(); ++a) images.push_back({a});
    return Substitution(alphabet, std::move(images));
}

/// First n letters of the fixed word of s starting with a.
inline Word fixed_point_prefix(const Substitution& s, Letter a, std::size_t n) {
    const Word& img = s.image(a);
    if (img.front() != a)
        throw DomainError("image of '" + s.alphabet().name(a) + "' does not begin with '" + s.alphabet().name(a) + "'");
    Word w{a};
    while (w.size() < n) {
        Word next = s.apply(w);
        if (next.size() == w.size()) throw DomainError("fixed word of '" + s.alphabet().name(a) + "' is finite");
        w = std::move(next);
    }
    w.resize(n);
    return w;
}

/// All length-n factors of the language of a primitive substitution.
inline std::set<Word> factor_language(const Substitution& s, std::size_t n) {
    if (!is_primitive(s)) throw DomainError("factor_language: substitution is not primitive");
    if (n == 0) return {Word{}};
    std::set<Word> found;
    auto collect = [&](const Word& w, std::vector<Word>& fresh) {
        for (std::size_t i = 0; i + n <= w.size(); ++i) {
            Word f(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + n));
            if (found.insert(f).second) fresh.push_back(std::move(f));
        }
    };
    std::vector<Word> frontier;
    for (Letter a = 0; a < s.size(); ++a) {
        Word w{a};
        for (int k = 0; w.size() < n; ++k) {
            if (k > 4 * s.size() * s.size() + 4) throw DomainError("factor_language: words do not grow");
            w = s.apply(w);
        }
        collect(w, frontier);
    }
    while (!frontier.empty()) {
        std::vector<Word> fresh;
        for (const auto& w : frontier) collect(s.apply(w), fresh);
        frontier = std::move(fresh);
    }
    return found;
}

}  // namespace pdstile
