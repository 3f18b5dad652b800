#include "chered/relations.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace chered {

namespace {

using Op = std::function<PolyRepElement(const PolyRepElement&)>;

Op word_op(Word w) {
    return [w = std::move(w)](const PolyRepElement& f) { return act_word(w, f); };
}

Op compose(Op a, Op b) {
    return [a = std::move(a), b = std::move(b)](const PolyRepElement& f) { return a(b(f)); };
}

// Word for the transposition (i,j), i < j: s_i ... s_{j-1} s_{j-2} ... s_i.
Word transposition_word(unsigned i, unsigned j) {
    Word w;
    for (unsigned k = i; k < j; ++k) w.push_back(Generator::swap(k));
    for (unsigned k = j - 1; k-- > i;) w.push_back(Generator::swap(k));
    return w;
}

} // namespace

std::vector<PolyRepElement> basis_monomials(const Context& ctx, unsigned degree_bound) {
    std::vector<std::vector<unsigned>> uexps;
    std::vector<unsigned> cur(ctx.n, 0);
    // enumerate all u-exponent vectors with total degree <= degree_bound
    while (true) {
        unsigned total = 0;
        for (auto e : cur) total += e;
        if (total <= degree_bound) uexps.push_back(cur);
        unsigned i = 0;
        while (i < ctx.n) {
            if (++cur[i] <= degree_bound) break;
            cur[i] = 0;
            ++i;
        }
        if (i == ctx.n) break;
    }
    auto texps = enumerate_diagonal(ctx);
    std::vector<PolyRepElement> out;
    out.reserve(uexps.size() * texps.size());
    for (const auto& u : uexps) {
        for (const auto& t : texps) out.push_back(PolyRepElement::monomial(ctx, u, t));
    }
    return out;
}

std::vector<RelationCheck> presentation_relations(const Context& ctx) {
    const unsigned n = ctx.n, ell = ctx.ell;
    std::vector<RelationCheck> rels;

    // u_i (j,j+1) = (j,j+1) u_{(j,j+1).i} + k*ell*(d_{ij} - d_{i,j+1}) pi_{j,j+1}
    for (unsigned j = 1; j + 1 <= n; ++j) {
        for (unsigned i = 1; i <= n; ++i) {
            unsigned ii = (i == j) ? j + 1 : (i == j + 1 ? j : i);
            int delta = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
            ParamPoly kl = ParamPoly::kappa(ctx);
            kl *= Rational(static_cast<long>(ell) * delta);
            RelationCheck rc;
            rc.id = "alt.u_swap.i" + std::to_string(i) + ".j" + std::to_string(j);
            rc.lhs = word_op({Generator::u(i), Generator::swap(j)});
            rc.rhs = [j, ii, delta, kl](const PolyRepElement& f) {
                PolyRepElement r = act_gen(Generator::swap(j), act_gen(Generator::u(ii), f));
                if (delta) r += pi_mult(j, f).scaled(kl);
                return r;
            };
            rels.push_back(std::move(rc));
        }
    }
    if (n < 2) {
        rels.push_back({"alt.u_swap.vacuous", nullptr, nullptr});
    }

    // u_i t_j = t_j u_i
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            rels.push_back({"alt.u_t.i" + std::to_string(i) + ".j" + std::to_string(j),
                            word_op({Generator::u(i), Generator::t(j)}),
                            word_op({Generator::t(j), Generator::u(i)})});
        }
    }

    // sigma (j,j-1) = (j+1,j) sigma  and  tau (j,j+1) = (j-1,j) tau, j = 2..n-1
    bool have_braid_shift = false;
    for (unsigned j = 2; j + 1 <= n; ++j) {
        have_braid_shift = true;
        rels.push_back({"alt.sigma_shift.j" + std::to_string(j),
                        word_op({Generator::sigma(), Generator::swap(j - 1)}),
                        word_op({Generator::swap(j), Generator::sigma()})});
        rels.push_back({"alt.tau_shift.j" + std::to_string(j),
                        word_op({Generator::tau(), Generator::swap(j)}),
                        word_op({Generator::swap(j - 1), Generator::tau()})});
    }
    if (!have_braid_shift) {
        rels.push_back({"alt.sigma_shift.vacuous", nullptr, nullptr});
        rels.push_back({"alt.tau_shift.vacuous", nullptr, nullptr});
    }

    // sigma^2 r_n = r_1 sigma^2 and tau^2 r_1 = r_n tau^2, with r_n read as
    // the last available transposition (n-1,n): conjugation by sigma shifts
    // the swap index up by one, wrapping around the cylinder seam.
    if (n >= 2) {
        rels.push_back({"alt.sigma2_wrap",
                        word_op({Generator::sigma(), Generator::sigma(), Generator::swap(n - 1)}),
                        word_op({Generator::swap(1), Generator::sigma(), Generator::sigma()})});
        rels.push_back({"alt.tau2_wrap",
                        word_op({Generator::tau(), Generator::tau(), Generator::swap(1)}),
                        word_op({Generator::swap(n - 1), Generator::tau(), Generator::tau()})});
    } else {
        rels.push_back({"alt.sigma2_wrap.vacuous", nullptr, nullptr});
        rels.push_back({"alt.tau2_wrap.vacuous", nullptr, nullptr});
    }

    // sigma tau = u_1 - p(zeta^{-1} t_1) + hbar
    rels.push_back({"alt.sigma_tau", word_op({Generator::sigma(), Generator::tau()}),
                    [&ctx](const PolyRepElement& f) {
                        PolyRepElement r = act_gen(Generator::u(1), f);
                        r += f.scaled(ParamPoly::hbar(*f.context()));
                        r -= p_of_t_mult(1, -1, f);
                        return r;
                    }});
    // tau sigma = u_n - p(t_n)
    rels.push_back({"alt.tau_sigma", word_op({Generator::tau(), Generator::sigma()}),
                    [n](const PolyRepElement& f) {
                        PolyRepElement r = act_gen(Generator::u(n), f);
                        r -= p_of_t_mult(n, 0, f);
                        return r;
                    }});

    // u_i u_j = u_j u_i
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) {
            rels.push_back({"alt.uu.i" + std::to_string(i) + ".j" + std::to_string(j),
                            word_op({Generator::u(i), Generator::u(j)}),
                            word_op({Generator::u(j), Generator::u(i)})});
        }
    }

    // u_i sigma = sigma u_{i-1} with u_0 = u_n - hbar
    for (unsigned i = 1; i <= n; ++i) {
        RelationCheck rc;
        rc.id = "alt.u_sigma.i" + std::to_string(i);
        rc.lhs = word_op({Generator::u(i), Generator::sigma()});
        if (i > 1) {
            rc.rhs = word_op({Generator::sigma(), Generator::u(i - 1)});
        } else {
            rc.rhs = [n](const PolyRepElement& f) {
                PolyRepElement g = act_gen(Generator::u(n), f);
                g -= f.scaled(ParamPoly::hbar(*f.context()));
                return act_gen(Generator::sigma(), g);
            };
        }
        rels.push_back(std::move(rc));
    }
    // u_i tau = tau u_{i+1} with u_{n+1} = u_1 + hbar
    for (unsigned i = 1; i <= n; ++i) {
        RelationCheck rc;
        rc.id = "alt.u_tau.i" + std::to_string(i);
        rc.lhs = word_op({Generator::u(i), Generator::tau()});
        if (i < n) {
            rc.rhs = word_op({Generator::tau(), Generator::u(i + 1)});
        } else {
            rc.rhs = [](const PolyRepElement& f) {
                PolyRepElement g = act_gen(Generator::u(1), f);
                g += f.scaled(ParamPoly::hbar(*f.context()));
                return act_gen(Generator::tau(), g);
            };
        }
        rels.push_back(std::move(rc));
    }
    // t_i sigma = sigma t_{i-1} with t_0 = zeta t_n
    for (unsigned i = 1; i <= n; ++i) {
        RelationCheck rc;
        rc.id = "alt.t_sigma.i" + std::to_string(i);
        rc.lhs = word_op({Generator::t(i), Generator::sigma()});
        if (i > 1) {
            rc.rhs = word_op({Generator::sigma(), Generator::t(i - 1)});
        } else {
            rc.rhs = [n](const PolyRepElement& f) {
                return act_gen(Generator::sigma(), act_gen(Generator::t(n), f))
                    .scaled(f.context()->zeta(1));
            };
        }
        rels.push_back(std::move(rc));
    }
    // t_i tau = tau t_{i+1} with t_{n+1} = zeta^{-1} t_1
    for (unsigned i = 1; i <= n; ++i) {
        RelationCheck rc;
        rc.id = "alt.t_tau.i" + std::to_string(i);
        rc.lhs = word_op({Generator::t(i), Generator::tau()});
        if (i < n) {
            rc.rhs = word_op({Generator::tau(), Generator::t(i + 1)});
        } else {
            rc.rhs = [](const PolyRepElement& f) {
                return act_gen(Generator::tau(), act_gen(Generator::t(1), f))
                    .scaled(f.context()->zeta(-1));
            };
        }
        rels.push_back(std::move(rc));
    }

    // tau (1,2) sigma = sigma (n-1,n) tau + k sum_m zeta^m t_n^m t_1^{-m}
    if (n >= 2) {
        RelationCheck rc;
        rc.id = "alt.tau_swap_sigma";
        rc.lhs = word_op({Generator::tau(), Generator::swap(1), Generator::sigma()});
        rc.rhs = [n, ell](const PolyRepElement& f) {
            const Context& cx = *f.context();
            PolyRepElement r =
                act_word({Generator::sigma(), Generator::swap(n - 1), Generator::tau()}, f);
            ParamPoly kap = ParamPoly::kappa(cx);
            for (unsigned m = 0; m < ell; ++m) {
                TExp t(n, 0);
                t[n - 1] = static_cast<uint16_t>(m);
                t[0] = static_cast<uint16_t>((ell - m) % ell);
                ParamPoly coeff = kap;
                coeff *= cx.zeta(m);
                r += act_tmono(t, f).scaled(coeff);
            }
            return r;
        };
        rels.push_back(std::move(rc));
    } else {
        rels.push_back({"alt.tau_swap_sigma.vacuous", nullptr, nullptr});
    }

    return rels;
}

std::vector<RelationCheck> standard_relations(const Context& ctx) {
    const unsigned n = ctx.n, ell = ctx.ell;
    std::vector<RelationCheck> rels;
    std::vector<Word> X(n + 1), Y(n + 1);
    for (unsigned i = 1; i <= n; ++i) {
        X[i] = standard_gen_word(StandardKind::X, i, ctx);
        Y[i] = standard_gen_word(StandardKind::Y, i, ctx);
    }
    auto concat = [](const Word& a, const Word& b) {
        Word w = a;
        w.insert(w.end(), b.begin(), b.end());
        return w;
    };

    // [x_i, x_j] = 0, [y_i, y_j] = 0
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) {
            rels.push_back({"std.xx.i" + std::to_string(i) + ".j" + std::to_string(j),
                            word_op(concat(X[i], X[j])), word_op(concat(X[j], X[i]))});
            rels.push_back({"std.yy.i" + std::to_string(i) + ".j" + std::to_string(j),
                            word_op(concat(Y[i], Y[j])), word_op(concat(Y[j], Y[i]))});
        }
    }
    if (n < 2) {
        rels.push_back({"std.xx.vacuous", nullptr, nullptr});
        rels.push_back({"std.yy.vacuous", nullptr, nullptr});
    }

    // refln1: t_i x_j = zeta^{d_ij} x_j t_i ; refln2: t_i y_j = zeta^{-d_ij} y_j t_i
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            long d = (i == j) ? 1 : 0;
            {
                RelationCheck rc;
                rc.id = "std.refln1.i" + std::to_string(i) + ".j" + std::to_string(j);
                Word lw{Generator::t(i)};
                lw.insert(lw.end(), X[j].begin(), X[j].end());
                rc.lhs = word_op(lw);
                Word rw = X[j];
                rw.push_back(Generator::t(i));
                rc.rhs = [rw, d](const PolyRepElement& f) {
                    return act_word(rw, f).scaled(f.context()->zeta(d));
                };
                rels.push_back(std::move(rc));
            }
            {
                RelationCheck rc;
                rc.id = "std.refln2.i" + std::to_string(i) + ".j" + std::to_string(j);
                Word lw{Generator::t(i)};
                lw.insert(lw.end(), Y[j].begin(), Y[j].end());
                rc.lhs = word_op(lw);
                Word rw = Y[j];
                rw.push_back(Generator::t(i));
                rc.rhs = [rw, d](const PolyRepElement& f) {
                    return act_word(rw, f).scaled(f.context()->zeta(-d));
                };
                rels.push_back(std::move(rc));
            }
        }
    }

    // com1: [x_i, y_i] = hbar + k sum_{j != i} sum_k t_i^k t_j^{-k} s_ij
    //        + sum_{k=1}^{ell-1} c_k (1 - zeta^{-k}) t_i^k
    for (unsigned i = 1; i <= n; ++i) {
        RelationCheck rc;
        rc.id = "std.com1.i" + std::to_string(i);
        Word xy = concat(X[i], Y[i]);
        Word yx = concat(Y[i], X[i]);
        rc.lhs = [xy, yx](const PolyRepElement& f) {
            return act_word(xy, f) - act_word(yx, f);
        };
        rc.rhs = [i, n, ell](const PolyRepElement& f) {
            const Context& cx = *f.context();
            PolyRepElement r = f.scaled(ParamPoly::hbar(cx));
            ParamPoly kap = ParamPoly::kappa(cx);
            for (unsigned j = 1; j <= n; ++j) {
                if (j == i) continue;
                Word sij = transposition_word(std::min(i, j), std::max(i, j));
                PolyRepElement sf = act_word(sij, f);
                for (unsigned k = 0; k < ell; ++k) {
                    TExp t(n, 0);
                    t[i - 1] = static_cast<uint16_t>(k);
                    t[j - 1] = static_cast<uint16_t>((ell - k) % ell);
                    r += act_tmono(t, sf).scaled(kap);
                }
            }
            const auto& ck = cx.c_coeffs();
            for (unsigned k = 1; k < ell; ++k) {
                if (ck[k].is_zero()) continue;
                ParamPoly coeff = ck[k];
                Cyclo factor = cx.cone() - cx.zeta(-static_cast<long>(k));
                coeff *= factor;
                if (coeff.is_zero()) continue;
                TExp t(n, 0);
                t[i - 1] = static_cast<uint16_t>(k);
                r += act_tmono(t, f).scaled(coeff);
            }
            return r;
        };
        rels.push_back(std::move(rc));
    }

    // com2: [x_i, y_j] = -k sum_k zeta^{-k} t_i^k t_j^{-k} s_ij for i != j.
    // The zeta^{-k} weight comes from the pairing <y_j, alpha_s^v> = -zeta^{-k}
    // for the reflection t_i^k t_j^{-k} (i,j).
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            if (i == j) continue;
            RelationCheck rc;
            rc.id = "std.com2.i" + std::to_string(i) + ".j" + std::to_string(j);
            Word xy = concat(X[i], Y[j]);
            Word yx = concat(Y[j], X[i]);
            rc.lhs = [xy, yx](const PolyRepElement& f) {
                return act_word(xy, f) - act_word(yx, f);
            };
            rc.rhs = [i, j, n, ell](const PolyRepElement& f) {
                const Context& cx = *f.context();
                Word sij = transposition_word(std::min(i, j), std::max(i, j));
                PolyRepElement sf = act_word(sij, f);
                PolyRepElement r(&cx);
                ParamPoly kap = ParamPoly::kappa(cx);
                for (unsigned k = 0; k < ell; ++k) {
                    TExp t(n, 0);
                    t[i - 1] = static_cast<uint16_t>(k);
                    t[j - 1] = static_cast<uint16_t>((ell - k) % ell);
                    ParamPoly coeff = kap;
                    coeff *= cx.zeta(-static_cast<long>(k));
                    r -= act_tmono(t, sf).scaled(coeff);
                }
                return r;
            };
            rels.push_back(std::move(rc));
        }
    }
    if (n < 2) {
        rels.push_back({"std.com2.vacuous", nullptr, nullptr});
    }
    return rels;
}

std::vector<RelationCheck> group_relations(const Context& ctx) {
    const unsigned n = ctx.n;
    std::vector<RelationCheck> rels;
    for (unsigned i = 1; i + 1 <= n; ++i) {
        rels.push_back({"grp.swap_invol.i" + std::to_string(i),
                        word_op({Generator::swap(i), Generator::swap(i)}),
                        [](const PolyRepElement& f) { return f; }});
    }
    for (unsigned i = 1; i + 2 <= n; ++i) {
        rels.push_back(
            {"grp.braid.i" + std::to_string(i),
             word_op({Generator::swap(i), Generator::swap(i + 1), Generator::swap(i)}),
             word_op({Generator::swap(i + 1), Generator::swap(i), Generator::swap(i + 1)})});
    }
    // swap/t exchange: (j,j+1) t_i = t_{(j,j+1).i} (j,j+1)
    for (unsigned j = 1; j + 1 <= n; ++j) {
        for (unsigned i = 1; i <= n; ++i) {
            unsigned ii = (i == j) ? j + 1 : (i == j + 1 ? j : i);
            rels.push_back({"grp.swap_t.i" + std::to_string(i) + ".j" + std::to_string(j),
                            word_op({Generator::swap(j), Generator::t(i)}),
                            word_op({Generator::t(ii), Generator::swap(j)})});
        }
    }
    if (n < 2) rels.push_back({"grp.vacuous", nullptr, nullptr});
    return rels;
}

CheckResult run_relation(const RelationCheck& rc, const std::vector<PolyRepElement>& basis) {
    CheckResult res;
    res.id = rc.id;
    auto start = std::chrono::steady_clock::now();
    if (!rc.lhs || !rc.rhs) {
        res.status = CheckStatus::Vacuous;
        return res;
    }
    res.status = CheckStatus::Pass;
    for (const auto& f : basis) {
        PolyRepElement a, b;
        try {
            a = rc.lhs(f);
            b = rc.rhs(f);
        } catch (const NonDivisible& e) {
            res.status = CheckStatus::Fail;
            res.counterexample = "input " + f.str() + ": " + e.what();
            break;
        }
        if (a != b) {
            res.status = CheckStatus::Fail;
            res.counterexample =
                "input " + f.str() + ": lhs = " + a.str() + ", rhs = " + b.str();
            break;
        }
    }
    res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return res;
}

Report verify_relations(const Context& ctx, unsigned degree_bound, unsigned threads) {
    Report report;
    report.suite = "relations";
    auto basis = basis_monomials(ctx, degree_bound);
    std::vector<RelationCheck> rels = presentation_relations(ctx);
    {
        auto std_rels = standard_relations(ctx);
        rels.insert(rels.end(), std::make_move_iterator(std_rels.begin()),
                    std::make_move_iterator(std_rels.end()));
        auto grp = group_relations(ctx);
        rels.insert(rels.end(), std::make_move_iterator(grp.begin()),
                    std::make_move_iterator(grp.end()));
    }
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || rels.size() <= 1) {
        for (const auto& rc : rels) report.add(run_relation(rc, basis));
        return report;
    }
    std::vector<CheckResult> results(rels.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= rels.size()) break;
            results[k] = run_relation(rels[k], basis);
        }
    };
    std::vector<std::thread> pool;
    unsigned nt = std::min<unsigned>(threads, static_cast<unsigned>(rels.size()));
    pool.reserve(nt);
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& r : results) report.add(std::move(r));
    return report;
}

} // namespace chered
