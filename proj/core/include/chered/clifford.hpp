#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chered/rational.hpp"
#include "chered/report.hpp"

namespace chered {

// A charge in (Q/Z) + Z*kbar, with kbar the formal generic step parameter.
struct Charge {
    Rational frac; // canonical representative in [0, 1)
    long kmult = 0;

    Charge() = default;
    Charge(Rational f, long k);
    Charge shifted(const Rational& delta) const; // frac + delta mod 1
    Charge step() const { return Charge(frac, kmult + 1); }

    bool operator==(const Charge& o) const { return frac == o.frac && kmult == o.kmult; }
    bool operator<(const Charge& o) const {
        if (frac != o.frac) return frac < o.frac;
        return kmult < o.kmult;
    }
    std::string str() const;
};

// A charged segment: consecutive entries differ by kbar, so it is determined
// by its first charge and its length.
struct ChargedSegment {
    Charge start;
    unsigned length = 1;

    std::vector<Charge> entries() const;
    bool operator==(const ChargedSegment& o) const {
        return start == o.start && length == o.length;
    }
    bool operator<(const ChargedSegment& o) const {
        if (!(start == o.start)) return start < o.start;
        return length < o.length;
    }
    std::string str() const;
};

// Multiset of charged segments, kept sorted.
struct Multisegment {
    std::vector<ChargedSegment> segments;

    Multisegment() = default;
    explicit Multisegment(std::vector<ChargedSegment> segs);
    unsigned size() const;
    bool operator==(const Multisegment& o) const { return segments == o.segments; }
    bool operator<(const Multisegment& o) const { return segments < o.segments; }
    std::string str() const;
};

using Partition = std::vector<unsigned>; // weakly decreasing parts

// chi = (Q, xi): a charged multisegment plus an ell-multipartition, with
// |Q| + |xi| = n.
struct IndexPair {
    Multisegment Q;
    std::vector<Partition> xi; // ell components

    unsigned size() const;
    bool operator==(const IndexPair& o) const { return Q == o.Q && xi == o.xi; }
    bool operator<(const IndexPair& o) const {
        if (!(Q == o.Q)) return Q < o.Q;
        return xi < o.xi;
    }
    std::string str() const;
};

// The order-p twist: every segment charge drops by 1/p (mod 1) and the
// multipartition rotates left by ell/p.
IndexPair alpha_act(const IndexPair& chi, unsigned ell, unsigned p);

struct OrbitInfo {
    std::vector<IndexPair> orbit; // starting at chi, in alpha order
    unsigned p_chi = 1;           // smallest d >= 1 with alpha^d chi = chi
};
OrbitInfo orbit_and_stabilizer(const IndexPair& chi, unsigned ell, unsigned p);

struct CensusEntry {
    IndexPair representative; // lexicographically smallest element of the orbit
    unsigned orbit_size = 1;
    unsigned p_chi = 1;
    unsigned simple_count = 1; // p / p_chi
};

struct Census {
    unsigned total = 0;
    std::vector<CensusEntry> entries; // ordered by representative
};

// Enumerates all index pairs of size n whose segment charges are drawn from
// the universe (every entry of every segment must lie in it), groups them
// into alpha-orbits, and counts p/p_chi simples per orbit. With an empty
// universe this is the category-O census (Q = empty). Throws
// std::invalid_argument if the universe is not closed under the -1/p shift.
Census count_simples(unsigned n, unsigned ell, unsigned p,
                     const std::vector<Charge>& charge_universe);

// The default universe {j/(p*ell) : 0 <= j < p*ell} x {kmult in [0, kspan)}.
std::vector<Charge> default_charge_universe(unsigned ell, unsigned p, unsigned kspan = 2);

// All partitions of m.
std::vector<Partition> partitions_of(unsigned m);
// All ell-multipartitions of total size m.
std::vector<std::vector<Partition>> multipartitions_of(unsigned m, unsigned ell);

enum class RestrictionFate { RemainsSimple, SplitsInTwo };

// For ell = 2 (indices of simple modules upstairs): the restriction stays
// simple unless xi_1 = xi_2 and Q is fixed by the half-integer charge shift.
RestrictionFate g22n_restriction(const IndexPair& chi);

// Group-algebra witness for the Morita property: t_1^j is a unit lying in
// the zeta_p^j eigenspace of the diagonal twist, for every j.
bool morita_unit_check(unsigned ell, unsigned p, unsigned n);

// Clifford suite: alpha order, orbit/stabilizer divisibility, the category-O
// census for G(2,2,2) against the known family pattern, and the splitting
// criterion.
Report clifford_check(unsigned n, unsigned ell, unsigned p);

} // namespace chered
