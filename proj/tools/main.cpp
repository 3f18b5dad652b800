// Command line front end: run the verification suites and evaluate algebra
// words on elements of the polynomial representation.
//
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
// parse error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chered/clifford.hpp"
#include "chered/dictionary.hpp"
#include "chered/params.hpp"
#include "chered/parse.hpp"
#include "chered/printing.hpp"
#include "chered/psph.hpp"
#include "chered/relations.hpp"
#include "chered/report.hpp"

using namespace chered;

namespace {

int emit(const Report& rep, const RunConfig& cfg) {
    if (cfg.format == "json")
        std::cout << report_json(rep, cfg) << "\n";
    else
        std::cout << report_text(rep);
    return rep.all_passed() ? 0 : 1;
}

Report run_pcyclic(const Context& ctx) {
    Report rep;
    rep.suite = "pcyclic";
    // sweep every support pattern of a symbolic c-vector; distinct kappa
    // powers keep the entries from cancelling
    const unsigned ell = ctx.ell;
    for (unsigned mask = 0; mask < (1u << (ell - 1)); ++mask) {
        std::vector<ParamPoly> c;
        bool expected = true;
        for (unsigned k = 1; k < ell; ++k) {
            if (mask & (1u << (k - 1))) {
                c.push_back(ParamPoly::variable(ctx, ctx.kappa_index(), k));
                if (k % ctx.p != 0) expected = false;
            } else {
                c.push_back(ParamPoly::zero(ctx));
            }
        }
        PCyclicResult r = p_cyclic_check(c, ParamKind::C, ctx);
        CheckResult res;
        res.id = "pcyclic.support" + std::to_string(mask);
        bool ok = r.equivalent && (r.all_hold() == expected);
        res.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        if (!ok)
            res.counterexample = "support mask " + std::to_string(mask) + ": conditions (" +
                                 std::to_string(r.cond_c) + "," + std::to_string(r.cond_h) +
                                 "," + std::to_string(r.cond_s) + ")";
        rep.add(std::move(res));
    }
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification tool for the cylindrical Cherednik presentation of "
                 "G(l,p,n), its partially spherical subalgebra, and the module census"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--l", cfg.ell, "cyclotomic order l")->check(CLI::PositiveNumber);
        cmd->add_option("--p", cfg.p, "index p (must divide l)")->check(CLI::PositiveNumber);
        cmd->add_option("--n", cfg.n, "rank n")->check(CLI::PositiveNumber);
        cmd->add_option("--degree", cfg.degree_bound, "degree bound for monomial sweeps");
        cmd->add_option("--samples", cfg.samples, "random samples for seeded checks");
        cmd->add_option("--seed", cfg.seed, "random seed");
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string kind;
    verify->add_option("kind", kind, "relations | psph | galois | principal | pcyclic | clifford")
        ->required()
        ->check(CLI::IsMember({"relations", "psph", "galois", "principal", "pcyclic", "clifford"}));
    add_common(verify);

    auto* eval = app.add_subcommand("eval", "apply an algebra word to a polynomial");
    std::string expr, poly;
    eval->add_option("expr", expr, "word in t<i>, u<i>, s<i>, sig, tau, x<i>, y<i>")->required();
    eval->add_option("poly", poly, "element of the representation")->required();
    add_common(eval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cfg.ell % cfg.p != 0) {
        std::cerr << "error: p must divide l\n";
        return 2;
    }

    try {
        auto ctx = Context::make(cfg.ell, cfg.p, cfg.n);
        if (verify->parsed()) {
            Report rep;
            if (kind == "relations") {
                rep = verify_relations(*ctx, cfg.degree_bound);
            } else if (kind == "psph") {
                rep = psph_oracle_report(*ctx, std::min(cfg.degree_bound, 2u));
                Report zp = zp_degree_check(*ctx);
                rep.merge(zp);
            } else if (kind == "galois") {
                rep = galois_ring_check(*ctx, cfg.samples, cfg.seed);
            } else if (kind == "principal") {
                rep = principality_check(*ctx, cfg.degree_bound);
            } else if (kind == "pcyclic") {
                rep = run_pcyclic(*ctx);
            } else if (kind == "clifford") {
                rep = clifford_check(cfg.n, cfg.ell, cfg.p);
                Census cat_o = count_simples(cfg.n, cfg.ell, cfg.p, {});
                CheckResult info;
                info.id = "clifford.category_O_count=" + std::to_string(cat_o.total);
                info.status = CheckStatus::Pass;
                rep.add(std::move(info));
            }
            return emit(rep, cfg);
        }
        // eval
        Word w = parse_word(expr, *ctx);
        PolyRepElement f = parse_poly(poly, *ctx);
        if (cfg.p != 1 && !f.in_subring()) {
            std::cerr << "error: input lies outside the p-subring (sum of T exponents must be "
                         "0 mod p)\n";
            return 2;
        }
        PolyRepElement out = act_word(w, f);
        std::cout << pretty(out) << "\n";
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
