#pragma once

// Temperley-Lieb state-sum oracle built directly on the two Kauffman
// relations: crossings resolve into q * (one smoothing) + q^-1 * (the other),
// and every closed loop contributes -q^2 - q^-2. Diagrams are words of
// elementary generators on n strands; resolution enumerates all 2^|C| states,
// so everything here is desk scale by design.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skein/qring.hpp"

namespace skein {

/// Non-crossing perfect matching on 2n boundary points of a rectangle:
/// points 0..n-1 on the bottom (left to right), n..2n-1 on the top.
class PlanarMatching {
public:
    PlanarMatching(int strands, std::vector<int> pairing);  // validates

    static PlanarMatching identity(int strands);
    /// Cap-cup generator e_i (1-based position): bottom i joined to bottom
    /// i+1, top i to top i+1.
    static PlanarMatching capcup(int strands, int position);

    int strands() const { return strands_; }
    int partner(int point) const { return pairing_[static_cast<size_t>(point)]; }
    const std::vector<int>& pairing() const { return pairing_; }
    /// Number of strands running from bottom to top.
    int through_strands() const;

    friend bool operator==(const PlanarMatching&, const PlanarMatching&) = default;
    friend bool operator<(const PlanarMatching& a, const PlanarMatching& b) {
        return a.pairing_ < b.pairing_;
    }

    std::string to_string() const;  // "{0-3,1-2}"

private:
    int strands_;
    std::vector<int> pairing_;
};

/// All non-crossing perfect matchings on 2n points; the count is the n-th
/// Catalan number.
std::vector<PlanarMatching> all_matchings(int strands);

/// -q^2 - q^-2, the value of a trivial loop.
LaurentPoly loop_value();

/// Formal sum of planar matchings with Laurent coefficients.
class TLElement {
public:
    explicit TLElement(int strands) : strands_(strands) {}
    static TLElement basis(PlanarMatching m);
    static TLElement identity(int strands);

    int strands() const { return strands_; }
    const std::map<PlanarMatching, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PlanarMatching& m, const LaurentPoly& c);
    LaurentPoly coefficient(const PlanarMatching& m) const;

    TLElement scaled(const LaurentPoly& c) const;
    friend TLElement operator+(const TLElement&, const TLElement&);
    friend TLElement operator-(const TLElement&, const TLElement&);
    friend bool operator==(const TLElement&, const TLElement&);

    std::string to_string(bool spaces = true) const;

private:
    int strands_;
    std::map<PlanarMatching, LaurentPoly> terms_;
};

/// Word of elementary tangle generators, read bottom to top.
struct DiagramWord {
    enum class Kind { Crossing, CapCup, Kink };
    struct Gen {
        Kind kind;
        int index;  // 1-based: crossings/cap-cups at 1..n-1, kinks at 1..n
        int sign;   // +1 or -1 for crossings and kinks
    };

    int strands = 0;
    std::vector<Gen> gens;

    void validate() const;
    /// Token syntax: "s2" crossing at 2, "s2'" its negative, "e1" cap-cup,
    /// "k+" / "k-" kinks (optionally "k+3" for strand 3).
    static DiagramWord parse(int strands, std::string_view tokens);
    std::string to_string() const;
};

/// Full Kauffman state sum of a diagram word: every crossing resolved both
/// ways, loops absorbed as -q^2 - q^-2, trivial components removed.
TLElement resolve(const DiagramWord& word);

/// Stacking product: a placed above b, loops created by the gluing absorbed.
TLElement multiply(const TLElement& a, const TLElement& b);

/// Coefficient of the identity matching in the resolution of the n-strand
/// twist diagram (one positive kink followed by crossings 1..n-1).
LaurentPoly twist_lemma_coefficient(int n);

}  // namespace skein
