#pragma once

#include <cstdint>
#include <iosfwd>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "detrep/curve.hpp"
#include "detrep/fp.hpp"
#include "detrep/frobenius.hpp"
#include "detrep/generators.hpp"
#include "detrep/linform.hpp"
#include "detrep/rational.hpp"

// Canonical line-oriented text format. Rationals print as "p/q" (or "p"
// when q = 1), prime-field values as their residue; a linear form is g
// space-separated scalars; a matrix of linear forms is an (r+1)^2-row
// block in row-major order; a multivariate polynomial is one line
// "coeff e1 ... eg" per term in ascending deglex order; a univariate
// polynomial is its coefficients low to high. parse(serialize(x)) is the
// identity, and serialize(parse(f)) = f for canonical files.

namespace detrep {

enum class FieldTag { Rationals, Prime };

struct FileHeader {
    int version = 1;
    FieldTag field = FieldTag::Rationals;
    std::uint64_t prime = 0; // when field == Prime
    std::size_t r = 0;
    std::size_t g = 0;
};

template <class K>
struct ScalarIO; // parse/print for a coefficient field

template <>
struct ScalarIO<Rat> {
    static Rat parse(const std::string& tok) { return Rat::parse(tok); }
    static std::string print(const Rat& x) { return x.str(); }
    static bool is_negative(const Rat& x) { return x.sign() < 0; }
    static Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }
    static constexpr FieldTag tag = FieldTag::Rationals;
};

template <>
struct ScalarIO<Fp> {
    static Fp parse(const std::string& tok) {
        const auto slash = tok.find('/');
        try {
            if (slash == std::string::npos) return fp_of(mpz_class(tok));
            const Fp d = fp_of(mpz_class(tok.substr(slash + 1)));
            return fp_of(mpz_class(tok.substr(0, slash))) / d;
        } catch (const std::invalid_argument&) {
            throw ParseError("bad prime-field literal: " + tok);
        }
    }
    static std::string print(const Fp& x) { return x.str(); }
    static bool is_negative(const Fp&) { return false; }
    static Fp abs(const Fp& x) { return x; }
    static constexpr FieldTag tag = FieldTag::Prime;

  private:
    static Fp fp_of(const mpz_class& z) {
        mpz_class m = z % static_cast<unsigned long>(Fp::modulus());
        if (m < 0) m += static_cast<unsigned long>(Fp::modulus());
        return Fp::from_residue(m.get_ui());
    }
};

// ---------------------------------------------------------------------
// instance files: a header plus a sequence of named objects

template <class K>
struct TagObject {
    std::string value;
};

template <class K>
using InstanceObject = std::variant<Matrix<K>,            // "matrix"
                                    LinFormMatrix<K>,     // "linform-matrix"
                                    MultiPoly<K>,         // "multipoly"
                                    UniPoly<K>,           // "unipoly"
                                    Matrix<UniPoly<K>>,   // "unipoly-matrix"
                                    ParamCurve<K>,        // "curve"
                                    PointCloudCurve<K>,   // "points"
                                    PetriTensor<K>,       // "tensor"
                                    EquivalenceCertificate<K>, // "certificate"
                                    TagObject<K>>;        // "tag"

template <class K>
struct Instance {
    FileHeader header;
    std::vector<std::pair<std::string, InstanceObject<K>>> objects;

    const InstanceObject<K>* find(const std::string& name) const {
        for (const auto& [n, obj] : objects)
            if (n == name) return &obj;
        return nullptr;
    }

    template <class T>
    const T* first_of() const {
        for (const auto& [n, obj] : objects)
            if (const T* p = std::get_if<T>(&obj)) return p;
        return nullptr;
    }

    template <class T>
    const T* get(const std::string& name) const {
        const InstanceObject<K>* obj = find(name);
        return obj ? std::get_if<T>(obj) : nullptr;
    }
};

FileHeader parse_header_text(const std::string& text);

template <class K>
Instance<K> parse_instance(const std::string& text);

template <class K>
std::string serialize_instance(const Instance<K>& inst);

extern template Instance<Rat> parse_instance<Rat>(const std::string&);
extern template Instance<Fp> parse_instance<Fp>(const std::string&);
extern template std::string serialize_instance<Rat>(const Instance<Rat>&);
extern template std::string serialize_instance<Fp>(const Instance<Fp>&);

// ---------------------------------------------------------------------
// human-readable polynomial printing: variables x1..xg, parameter t

template <class K>
std::string human_multipoly(const MultiPoly<K>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    // descending deglex: leading term first
    const auto& terms = f.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const K& c = it->second;
        const bool neg = ScalarIO<K>::is_negative(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const K mag = ScalarIO<K>::abs(c);
        std::string mono;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
        }
        const std::string cs = ScalarIO<K>::print(mag);
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

template <class K>
std::string human_unipoly(const UniPoly<K>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int d = f.degree(); d >= 0; --d) {
        const K c = f.coeff_at(static_cast<std::size_t>(d));
        if (c.is_zero()) continue;
        const bool neg = ScalarIO<K>::is_negative(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string cs = ScalarIO<K>::print(ScalarIO<K>::abs(c));
        std::string mono;
        if (d >= 1) {
            mono = "t";
            if (d >= 2) mono += "^" + std::to_string(d);
        }
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

} // namespace detrep
