#include "skein/tldiag.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

// Circular boundary order of the rectangle: bottom left to right, then top
// right to left. The map is an involution.
int circle_of_point(int p, int n) { return p < n ? p : 3 * n - 1 - p; }
int point_of_circle(int c, int n) { return c < n ? c : 3 * n - 1 - c; }

constexpr size_t kMaxCrossings = 24;

}  // namespace

// ---------------------------------------------------------------------------
// PlanarMatching

PlanarMatching::PlanarMatching(int strands, std::vector<int> pairing)
    : strands_(strands), pairing_(std::move(pairing)) {
    if (strands_ < 0) throw std::invalid_argument("PlanarMatching: negative strand count");
    const int total = 2 * strands_;
    if (static_cast<int>(pairing_.size()) != total)
        throw std::invalid_argument("PlanarMatching: pairing must list all 2n points");
    for (int p = 0; p < total; ++p) {
        int q = pairing_[static_cast<size_t>(p)];
        if (q < 0 || q >= total || q == p || pairing_[static_cast<size_t>(q)] != p)
            throw std::invalid_argument("PlanarMatching: not a perfect matching");
    }
    // Non-crossing check along the circular order.
    std::vector<int> stack;
    for (int c = 0; c < total; ++c) {
        int p = point_of_circle(c, strands_);
        int q = pairing_[static_cast<size_t>(p)];
        if (circle_of_point(q, strands_) > c) {
            stack.push_back(p);
        } else {
            if (stack.empty() || stack.back() != q)
                throw std::invalid_argument("PlanarMatching: pairing has crossings");
            stack.pop_back();
        }
    }
}

PlanarMatching PlanarMatching::identity(int strands) {
    std::vector<int> pairing(static_cast<size_t>(2 * strands));
    for (int i = 0; i < strands; ++i) {
        pairing[static_cast<size_t>(i)] = strands + i;
        pairing[static_cast<size_t>(strands + i)] = i;
    }
    return PlanarMatching(strands, std::move(pairing));
}

PlanarMatching PlanarMatching::capcup(int strands, int position) {
    if (position < 1 || position >= strands)
        throw std::invalid_argument("capcup: position out of range");
    std::vector<int> pairing(static_cast<size_t>(2 * strands));
    for (int i = 0; i < strands; ++i) {
        pairing[static_cast<size_t>(i)] = strands + i;
        pairing[static_cast<size_t>(strands + i)] = i;
    }
    const int p = position - 1;
    pairing[static_cast<size_t>(p)] = p + 1;
    pairing[static_cast<size_t>(p + 1)] = p;
    pairing[static_cast<size_t>(strands + p)] = strands + p + 1;
    pairing[static_cast<size_t>(strands + p + 1)] = strands + p;
    return PlanarMatching(strands, std::move(pairing));
}

int PlanarMatching::through_strands() const {
    int count = 0;
    for (int i = 0; i < strands_; ++i)
        if (pairing_[static_cast<size_t>(i)] >= strands_) ++count;
    return count;
}

std::string PlanarMatching::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int p = 0; p < 2 * strands_; ++p) {
        int q = pairing_[static_cast<size_t>(p)];
        if (q < p) continue;
        if (!first) os << ',';
        first = false;
        os << p << '-' << q;
    }
    os << '}';
    return os.str();
}

namespace {

// Non-crossing matchings of the circle positions in `segments`, a stack of
// independent runs that must each close within itself.
void enumerate_matchings(std::vector<std::vector<int>>& segments,
                         std::vector<std::pair<int, int>>& pairs,
                         std::vector<std::vector<std::pair<int, int>>>& out) {
    while (!segments.empty() && segments.back().empty()) segments.pop_back();
    if (segments.empty()) {
        out.push_back(pairs);
        return;
    }
    std::vector<int> seg = std::move(segments.back());
    segments.pop_back();
    const int first = seg.front();
    for (size_t j = 1; j < seg.size(); j += 2) {
        pairs.emplace_back(first, seg[j]);
        segments.emplace_back(seg.begin() + static_cast<long>(j) + 1, seg.end());
        segments.emplace_back(seg.begin() + 1, seg.begin() + static_cast<long>(j));
        enumerate_matchings(segments, pairs, out);
        segments.pop_back();
        segments.pop_back();
        pairs.pop_back();
    }
    segments.push_back(std::move(seg));
}

}  // namespace

std::vector<PlanarMatching> all_matchings(int strands) {
    if (strands < 0) throw std::invalid_argument("all_matchings: negative strand count");
    std::vector<int> circle(static_cast<size_t>(2 * strands));
    for (int i = 0; i < 2 * strands; ++i) circle[static_cast<size_t>(i)] = i;
    std::vector<std::vector<int>> segments{circle};
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<std::pair<int, int>>> raw;
    enumerate_matchings(segments, pairs, raw);

    std::vector<PlanarMatching> result;
    result.reserve(raw.size());
    for (const auto& pr : raw) {
        std::vector<int> pairing(static_cast<size_t>(2 * strands));
        for (const auto& [ca, cb] : pr) {
            int pa = point_of_circle(ca, strands);
            int pb = point_of_circle(cb, strands);
            pairing[static_cast<size_t>(pa)] = pb;
            pairing[static_cast<size_t>(pb)] = pa;
        }
        result.emplace_back(strands, std::move(pairing));
    }
    std::sort(result.begin(), result.end());
    return result;
}

LaurentPoly loop_value() {
    return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
}

// ---------------------------------------------------------------------------
// TLElement

TLElement TLElement::basis(PlanarMatching m) {
    TLElement out(m.strands());
    out.add_term(m, LaurentPoly::one());
    return out;
}

TLElement TLElement::identity(int strands) { return basis(PlanarMatching::identity(strands)); }

void TLElement::add_term(const PlanarMatching& m, const LaurentPoly& c) {
    if (m.strands() != strands_)
        throw std::invalid_argument("TLElement::add_term: strand count mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly TLElement::coefficient(const PlanarMatching& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

TLElement TLElement::scaled(const LaurentPoly& c) const {
    TLElement out(strands_);
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
}

TLElement operator+(const TLElement& a, const TLElement& b) {
    if (a.strands_ != b.strands_)
        throw std::invalid_argument("TLElement addition: strand count mismatch");
    TLElement out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

TLElement operator-(const TLElement& a, const TLElement& b) {
    return a + b.scaled(LaurentPoly::constant(-1));
}

bool operator==(const TLElement& a, const TLElement& b) {
    return a.strands_ == b.strands_ && a.terms_ == b.terms_;
}

std::string TLElement::to_string(bool spaces) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (spaces ? " + " : "+");
        first = false;
        os << '(' << c.to_string(spaces) << ')' << (spaces ? " * " : "*") << m.to_string();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// DiagramWord

void DiagramWord::validate() const {
    if (strands < 1) throw std::invalid_argument("diagram word: strand count must be >= 1");
    for (const auto& g : gens) {
        switch (g.kind) {
            case Kind::Crossing:
            case Kind::CapCup:
                if (g.index < 1 || g.index >= strands)
                    throw std::invalid_argument("diagram word: generator position " +
                                                std::to_string(g.index) + " out of range 1.." +
                                                std::to_string(strands - 1));
                break;
            case Kind::Kink:
                if (g.index < 1 || g.index > strands)
                    throw std::invalid_argument("diagram word: kink strand " +
                                                std::to_string(g.index) + " out of range 1.." +
                                                std::to_string(strands));
                break;
        }
        if (g.kind != Kind::CapCup && g.sign != 1 && g.sign != -1)
            throw std::invalid_argument("diagram word: sign must be +1 or -1");
    }
}

DiagramWord DiagramWord::parse(int strands, std::string_view tokens) {
    DiagramWord word;
    word.strands = strands;
    std::istringstream in{std::string(tokens)};
    std::string tok;
    while (in >> tok) {
        Gen g{};
        if (tok[0] == 's' || tok[0] == 'e') {
            g.kind = tok[0] == 's' ? Kind::Crossing : Kind::CapCup;
            g.sign = 1;
            std::string rest = tok.substr(1);
            if (g.kind == Kind::Crossing && !rest.empty() && rest.back() == '\'') {
                g.sign = -1;
                rest.pop_back();
            }
            if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("diagram word: bad token \"" + tok + "\"");
            g.index = std::stoi(rest);
        } else if (tok[0] == 'k' && tok.size() >= 2 && (tok[1] == '+' || tok[1] == '-')) {
            g.kind = Kind::Kink;
            g.sign = tok[1] == '+' ? 1 : -1;
            std::string rest = tok.substr(2);
            if (rest.empty()) {
                g.index = 1;
            } else if (rest.find_first_not_of("0123456789") == std::string::npos) {
                g.index = std::stoi(rest);
            } else {
                throw std::invalid_argument("diagram word: bad token \"" + tok + "\"");
            }
        } else {
            throw std::invalid_argument("diagram word: bad token \"" + tok + "\"");
        }
        word.gens.push_back(g);
    }
    word.validate();
    return word;
}

std::string DiagramWord::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& g : gens) {
        if (!first) os << ' ';
        first = false;
        switch (g.kind) {
            case Kind::Crossing:
                os << 's' << g.index << (g.sign < 0 ? "'" : "");
                break;
            case Kind::CapCup:
                os << 'e' << g.index;
                break;
            case Kind::Kink:
                os << 'k' << (g.sign < 0 ? '-' : '+') << g.index;
                break;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// State sums

namespace {

// Wire tracer for stacking elementary slices onto n strands. Strand ends are
// graph nodes; peer[] links the two ends of each partial strand.
class SliceTracer {
public:
    explicit SliceTracer(int n) : n_(n), peer_(static_cast<size_t>(2 * n)) {
        frontier_.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            peer_[static_cast<size_t>(i)] = n + i;
            peer_[static_cast<size_t>(n + i)] = i;
            frontier_[static_cast<size_t>(i)] = n + i;
        }
    }

    void capcup(int pos0) {
        const int u = frontier_[static_cast<size_t>(pos0)];
        const int v = frontier_[static_cast<size_t>(pos0 + 1)];
        if (peer_[static_cast<size_t>(u)] == v) {
            ++loops_;
        } else {
            const int pu = peer_[static_cast<size_t>(u)];
            const int pv = peer_[static_cast<size_t>(v)];
            peer_[static_cast<size_t>(pu)] = pv;
            peer_[static_cast<size_t>(pv)] = pu;
        }
        const int x = new_end();
        const int y = new_end();
        peer_[static_cast<size_t>(x)] = y;
        peer_[static_cast<size_t>(y)] = x;
        frontier_[static_cast<size_t>(pos0)] = x;
        frontier_[static_cast<size_t>(pos0 + 1)] = y;
    }

    void free_loop() { ++loops_; }

    long long loops() const { return loops_; }

    PlanarMatching finish() const {
        // Boundary points: bottom i carries end i, top i carries frontier[i].
        std::vector<int> point_of_end(peer_.size(), -1);
        for (int i = 0; i < n_; ++i) {
            point_of_end[static_cast<size_t>(i)] = i;
            point_of_end[static_cast<size_t>(frontier_[static_cast<size_t>(i)])] = n_ + i;
        }
        std::vector<int> pairing(static_cast<size_t>(2 * n_), -1);
        for (size_t end = 0; end < peer_.size(); ++end) {
            int p = point_of_end[end];
            if (p < 0) continue;
            int q = point_of_end[static_cast<size_t>(peer_[end])];
            if (q < 0) throw std::logic_error("SliceTracer: strand end lost");
            pairing[static_cast<size_t>(p)] = q;
        }
        return PlanarMatching(n_, std::move(pairing));
    }

private:
    int new_end() {
        peer_.push_back(-1);
        return static_cast<int>(peer_.size()) - 1;
    }

    int n_;
    long long loops_ = 0;
    std::vector<int> peer_;
    std::vector<int> frontier_;
};

}  // namespace

TLElement resolve(const DiagramWord& word) {
    word.validate();
    size_t crossings = 0;
    for (const auto& g : word.gens)
        if (g.kind != DiagramWord::Kind::CapCup) ++crossings;
    if (crossings > kMaxCrossings)
        throw std::invalid_argument("resolve: more than " + std::to_string(kMaxCrossings) +
                                    " crossings; state sum too large");

    TLElement out(word.strands);
    const size_t states = size_t{1} << crossings;
    for (size_t mask = 0; mask < states; ++mask) {
        SliceTracer tracer(word.strands);
        long long sigma_sum = 0;
        size_t slot = 0;
        for (const auto& g : word.gens) {
            switch (g.kind) {
                case DiagramWord::Kind::CapCup:
                    tracer.capcup(g.index - 1);
                    break;
                case DiagramWord::Kind::Crossing: {
                    const int sigma = (mask >> slot++) & 1 ? 1 : -1;
                    sigma_sum += sigma;
                    // The q-weighted resolution of a positive crossing is the
                    // identity smoothing; for a negative crossing it is the
                    // cap-cup smoothing.
                    const bool identity_smoothing = (sigma == g.sign);
                    if (!identity_smoothing) tracer.capcup(g.index - 1);
                    break;
                }
                case DiagramWord::Kind::Kink: {
                    const int sigma = (mask >> slot++) & 1 ? 1 : -1;
                    sigma_sum += sigma;
                    // One smoothing of a kink leaves a trivial loop beside the
                    // strand, the other is the plain strand.
                    const bool loop_smoothing = (sigma == g.sign);
                    if (loop_smoothing) tracer.free_loop();
                    break;
                }
            }
        }
        LaurentPoly coeff = LaurentPoly::monomial(1, sigma_sum);
        for (long long l = 0; l < tracer.loops(); ++l) coeff = coeff * loop_value();
        out.add_term(tracer.finish(), coeff);
    }
    return out;
}

namespace {

// Composition of matchings with a above b: b's top points glue to a's bottom
// points. Returns the boundary matching and the number of closed loops formed
// in the middle.
std::pair<PlanarMatching, long long> compose_matchings(const PlanarMatching& a,
                                                       const PlanarMatching& b) {
    const int n = a.strands();
    std::vector<bool> interface_seen(static_cast<size_t>(n), false);

    // Follows a strand until it exits at the bottom of b or the top of a;
    // the result boundary reuses those indices directly.
    auto walk = [&](bool in_a, int point) {
        for (;;) {
            if (in_a) {
                int q = a.partner(point);
                if (q >= n) return q;  // top of a
                interface_seen[static_cast<size_t>(q)] = true;
                in_a = false;
                point = n + q;  // continue from b's top
            } else {
                int q = b.partner(point);
                if (q < n) return q;  // bottom of b
                interface_seen[static_cast<size_t>(q - n)] = true;
                in_a = true;
                point = q - n;  // continue from a's bottom
            }
        }
    };

    std::vector<int> pairing(static_cast<size_t>(2 * n), -1);
    for (int i = 0; i < n; ++i) {
        if (pairing[static_cast<size_t>(i)] != -1) continue;
        int dest = walk(false, i);
        pairing[static_cast<size_t>(i)] = dest;
        pairing[static_cast<size_t>(dest)] = i;
    }
    for (int i = 0; i < n; ++i) {
        if (pairing[static_cast<size_t>(n + i)] != -1) continue;
        int dest = walk(true, n + i);
        pairing[static_cast<size_t>(n + i)] = dest;
        pairing[static_cast<size_t>(dest)] = n + i;
    }

    long long loops = 0;
    for (int j = 0; j < n; ++j) {
        if (interface_seen[static_cast<size_t>(j)]) continue;
        // Trace the closed cycle through interface j.
        bool in_a = true;
        int point = j;
        long long guard = 0;
        do {
            if (in_a) {
                int q = a.partner(point);
                interface_seen[static_cast<size_t>(q)] = true;
                in_a = false;
                point = n + q;
            } else {
                int q = b.partner(point);
                interface_seen[static_cast<size_t>(q - n)] = true;
                in_a = true;
                point = q - n;
            }
            if (++guard > 4LL * n) throw std::logic_error("compose_matchings: runaway cycle");
        } while (!(in_a && point == j));
        ++loops;
    }
    return {PlanarMatching(n, std::move(pairing)), loops};
}

}  // namespace

TLElement multiply(const TLElement& a, const TLElement& b) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("multiply: strand count mismatch");
    TLElement out(a.strands());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            auto [m, loops] = compose_matchings(ma, mb);
            LaurentPoly coeff = ca * cb;
            for (long long l = 0; l < loops; ++l) coeff = coeff * loop_value();
            out.add_term(m, coeff);
        }
    return out;
}

LaurentPoly twist_lemma_coefficient(int n) {
    if (n < 1) throw std::invalid_argument("twist_lemma_coefficient: n must be >= 1");
    DiagramWord word;
    word.strands = n;
    word.gens.push_back({DiagramWord::Kind::Kink, 1, 1});
    for (int i = 1; i < n; ++i) word.gens.push_back({DiagramWord::Kind::Crossing, i, 1});
    return resolve(word).coefficient(PlanarMatching::identity(n));
}

}  // namespace skein
