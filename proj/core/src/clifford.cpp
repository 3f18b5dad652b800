#include "chered/clifford.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chered/cyclotomic.hpp"
#include "chered/gpn.hpp"

namespace chered {

namespace {

Rational mod1(Rational x) {
    Integer num = numerator(x), den = denominator(x);
    Integer q = num / den;
    Rational r = x - Rational(q);
    if (r < 0) r += 1;
    return r;
}

} // namespace

Charge::Charge(Rational f, long k) : frac(mod1(std::move(f))), kmult(k) {}

Charge Charge::shifted(const Rational& delta) const {
    return Charge(frac + delta, kmult);
}

std::string Charge::str() const {
    std::ostringstream os;
    os << frac.str();
    if (kmult == 1) os << "+k";
    else if (kmult == -1) os << "-k";
    else if (kmult) os << (kmult > 0 ? "+" : "") << kmult << "k";
    return os.str();
}

std::vector<Charge> ChargedSegment::entries() const {
    std::vector<Charge> out;
    out.reserve(length);
    Charge c = start;
    for (unsigned i = 0; i < length; ++i) {
        out.push_back(c);
        c = c.step();
    }
    return out;
}

std::string ChargedSegment::str() const {
    std::string s = "(";
    Charge c = start;
    for (unsigned i = 0; i < length; ++i) {
        if (i) s += ",";
        s += c.str();
        c = c.step();
    }
    return s + ")";
}

Multisegment::Multisegment(std::vector<ChargedSegment> segs) : segments(std::move(segs)) {
    std::sort(segments.begin(), segments.end());
}

unsigned Multisegment::size() const {
    unsigned s = 0;
    for (const auto& seg : segments) s += seg.length;
    return s;
}

std::string Multisegment::str() const {
    if (segments.empty()) return "{}";
    std::string s = "{";
    for (size_t i = 0; i < segments.size(); ++i) {
        if (i) s += ",";
        s += segments[i].str();
    }
    return s + "}";
}

unsigned IndexPair::size() const {
    unsigned s = Q.size();
    for (const auto& part : xi)
        for (auto row : part) s += row;
    return s;
}

std::string IndexPair::str() const {
    std::string s = "Q=" + Q.str() + ", xi=(";
    for (size_t c = 0; c < xi.size(); ++c) {
        if (c) s += ",";
        if (xi[c].empty()) {
            s += "[]";
        } else {
            s += "[";
            for (size_t r = 0; r < xi[c].size(); ++r) {
                if (r) s += ",";
                s += std::to_string(xi[c][r]);
            }
            s += "]";
        }
    }
    return s + ")";
}

IndexPair alpha_act(const IndexPair& chi, unsigned ell, unsigned p) {
    IndexPair out;
    Rational shift = -Rational(1, p);
    std::vector<ChargedSegment> segs;
    segs.reserve(chi.Q.segments.size());
    for (const auto& seg : chi.Q.segments)
        segs.push_back(ChargedSegment{seg.start.shifted(shift), seg.length});
    out.Q = Multisegment(std::move(segs));
    unsigned rot = ell / p;
    out.xi.resize(chi.xi.size());
    for (size_t c = 0; c < chi.xi.size(); ++c) out.xi[c] = chi.xi[(c + rot) % chi.xi.size()];
    return out;
}

OrbitInfo orbit_and_stabilizer(const IndexPair& chi, unsigned ell, unsigned p) {
    OrbitInfo info;
    info.orbit.push_back(chi);
    IndexPair cur = alpha_act(chi, ell, p);
    unsigned d = 1;
    while (!(cur == chi)) {
        info.orbit.push_back(cur);
        cur = alpha_act(cur, ell, p);
        ++d;
        if (d > p) throw std::logic_error("alpha orbit exceeded p");
    }
    info.p_chi = d;
    return info;
}

std::vector<Partition> partitions_of(unsigned m) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rem, unsigned maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned part = std::min(rem, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(rem - part, part);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

std::vector<std::vector<Partition>> multipartitions_of(unsigned m, unsigned ell) {
    std::vector<std::vector<Partition>> out;
    std::vector<std::vector<Partition>> per(m + 1);
    for (unsigned s = 0; s <= m; ++s) per[s] = partitions_of(s);
    std::vector<Partition> cur(ell);
    // distribute m over ell components
    struct Frame { unsigned comp, rem; };
    std::function<void(unsigned, unsigned)> rec = [&](unsigned comp, unsigned rem) {
        if (comp == ell) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (unsigned s = 0; s <= rem; ++s) {
            for (const auto& part : per[s]) {
                cur[comp] = part;
                rec(comp + 1, rem - s);
            }
        }
    };
    rec(0, m);
    return out;
}

std::vector<Charge> default_charge_universe(unsigned ell, unsigned p, unsigned kspan) {
    std::vector<Charge> out;
    for (unsigned j = 0; j < p * ell; ++j) {
        for (unsigned k = 0; k < kspan; ++k) {
            out.emplace_back(Rational(j, static_cast<long>(p) * ell), static_cast<long>(k));
        }
    }
    return out;
}

namespace {

// All multisegments of given size with all entries inside the universe.
std::vector<Multisegment> multisegments_of(unsigned size, const std::set<Charge>& universe) {
    // candidate segments: any start charge whose full entry list stays inside
    std::vector<ChargedSegment> cands;
    for (const auto& c : universe) {
        for (unsigned len = 1; len <= size; ++len) {
            ChargedSegment seg{c, len};
            bool ok = true;
            for (const auto& e : seg.entries()) {
                if (!universe.count(e)) { ok = false; break; }
            }
            if (ok) cands.push_back(seg);
        }
    }
    std::sort(cands.begin(), cands.end());
    std::vector<Multisegment> out;
    // multisets of candidate segments with total length = size, nondecreasing index
    std::vector<ChargedSegment> cur;
    std::function<void(size_t, unsigned)> rec = [&](size_t from, unsigned rem) {
        if (rem == 0) {
            out.push_back(Multisegment(cur));
            return;
        }
        for (size_t i = from; i < cands.size(); ++i) {
            if (cands[i].length > rem) continue;
            cur.push_back(cands[i]);
            rec(i, rem - cands[i].length);
            cur.pop_back();
        }
    };
    rec(0, size);
    return out;
}

} // namespace

Census count_simples(unsigned n, unsigned ell, unsigned p,
                     const std::vector<Charge>& charge_universe) {
    std::set<Charge> universe(charge_universe.begin(), charge_universe.end());
    Rational shift = -Rational(1, p);
    for (const auto& c : universe) {
        if (!universe.count(c.shifted(shift)))
            throw std::invalid_argument("charge universe not closed under -1/p shifts");
    }
    // enumerate all index pairs
    std::vector<IndexPair> pairs;
    for (unsigned qsize = 0; qsize <= n; ++qsize) {
        std::vector<Multisegment> multis;
        if (qsize == 0) {
            multis.push_back(Multisegment());
        } else {
            multis = multisegments_of(qsize, universe);
        }
        auto xis = multipartitions_of(n - qsize, ell);
        for (const auto& Q : multis) {
            for (const auto& xi : xis) {
                pairs.push_back(IndexPair{Q, xi});
            }
        }
    }
    // group into alpha-orbits
    std::set<IndexPair> seen;
    Census census;
    for (const auto& chi : pairs) {
        if (seen.count(chi)) continue;
        OrbitInfo info = orbit_and_stabilizer(chi, ell, p);
        CensusEntry entry;
        entry.representative = *std::min_element(info.orbit.begin(), info.orbit.end());
        entry.orbit_size = static_cast<unsigned>(info.orbit.size());
        entry.p_chi = info.p_chi;
        entry.simple_count = p / info.p_chi;
        for (const auto& x : info.orbit) seen.insert(x);
        census.entries.push_back(std::move(entry));
        census.total += p / info.p_chi;
    }
    std::sort(census.entries.begin(), census.entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) {
                  return a.representative < b.representative;
              });
    return census;
}

RestrictionFate g22n_restriction(const IndexPair& chi) {
    if (chi.xi.size() != 2) throw std::invalid_argument("g22n_restriction needs a bipartition");
    IndexPair twisted = alpha_act(chi, 2, 2);
    bool xi_equal = (chi.xi[0] == chi.xi[1]);
    bool q_fixed = (twisted.Q == chi.Q);
    return (xi_equal && q_fixed) ? RestrictionFate::SplitsInTwo : RestrictionFate::RemainsSimple;
}

bool morita_unit_check(unsigned ell, unsigned p, unsigned n) {
    auto ctx = Context::make(ell, p, n);
    // group algebra element t_1^j: check twist eigenvalue and invertibility
    for (unsigned j = 0; j < p; ++j) {
        GPNElement tj = GPNElement::diagonal(*ctx, 1, static_cast<long>(j));
        // alpha scales t_i by zeta_p = zeta_ell^{ell/p}; t_1^j picks up zeta_p^j
        long texp_total = 0;
        for (auto e : tj.texp()) texp_total += e;
        Cyclo eigen = Cyclo::zeta(ell, (static_cast<long>(ell) / p) * texp_total);
        Cyclo expected = Cyclo::zeta(ell, (static_cast<long>(ell) / p) * static_cast<long>(j));
        if (!(eigen == expected)) return false;
        // unit: t_1^j * t_1^{-j} = 1 in the group
        GPNElement inv = GPNElement::diagonal(*ctx, 1, -static_cast<long>(j));
        if (!((tj * inv) == GPNElement::identity(*ctx))) return false;
    }
    return true;
}

Report clifford_check(unsigned n, unsigned ell, unsigned p) {
    Report rep;
    rep.suite = "clifford";

    // alpha has order dividing p on a sample of index pairs
    {
        CheckResult res;
        res.id = "clifford.alpha_order";
        res.status = CheckStatus::Pass;
        auto xis = multipartitions_of(std::min(n, 3u), ell);
        for (const auto& xi : xis) {
            IndexPair chi{Multisegment(), xi};
            IndexPair cur = chi;
            for (unsigned d = 0; d < p; ++d) cur = alpha_act(cur, ell, p);
            if (!(cur == chi)) {
                res.status = CheckStatus::Fail;
                res.counterexample = chi.str();
                break;
            }
            OrbitInfo info = orbit_and_stabilizer(chi, ell, p);
            if (p % info.p_chi != 0 || info.orbit.size() != info.p_chi) {
                res.status = CheckStatus::Fail;
                res.counterexample = chi.str() + " p_chi=" + std::to_string(info.p_chi);
                break;
            }
        }
        rep.add(std::move(res));
    }

    // category-O census (Q empty) and the p=1 baseline
    {
        CheckResult res;
        res.id = "clifford.category_O_census";
        res.status = CheckStatus::Pass;
        Census cat_o = count_simples(n, ell, p, {});
        Census baseline = count_simples(n, ell, 1, {});
        if (p == 1 && cat_o.total != baseline.total) {
            res.status = CheckStatus::Fail;
        }
        // orbit arithmetic: sum over orbits of orbit_size equals the raw count
        unsigned covered = 0;
        for (const auto& e : cat_o.entries) covered += e.orbit_size;
        if (covered != baseline.total) {
            res.status = CheckStatus::Fail;
            res.counterexample = "orbit sizes cover " + std::to_string(covered) + " of " +
                                 std::to_string(baseline.total);
        }
        rep.add(std::move(res));
    }

    // G(2,2,2): the known family pattern
    if (ell == 2 && p == 2 && n == 2) {
        CheckResult res;
        res.id = "clifford.g222_families";
        res.status = CheckStatus::Pass;
        Census cat_o = count_simples(2, 2, 2, {});
        if (cat_o.total != 4) {
            res.status = CheckStatus::Fail;
            res.counterexample = "category O count " + std::to_string(cat_o.total);
        }
        // splitting matches stabilizers: xi = ((1),(1)) splits, the others pair up
        IndexPair sym{Multisegment(), {{1}, {1}}};
        IndexPair asym{Multisegment(), {{2}, {}}};
        if (g22n_restriction(sym) != RestrictionFate::SplitsInTwo ||
            g22n_restriction(asym) != RestrictionFate::RemainsSimple) {
            res.status = CheckStatus::Fail;
            res.counterexample = "splitting pattern";
        }
        rep.add(std::move(res));
    }

    // morita units
    {
        CheckResult res;
        res.id = "clifford.morita_units";
        res.status = morita_unit_check(ell, p, n) ? CheckStatus::Pass : CheckStatus::Fail;
        rep.add(std::move(res));
    }
    return rep;
}

} // namespace chered
