#include "turaev/cli.hpp"

#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>

#include "turaev/corpus.hpp"
#include "turaev/io.hpp"
#include "turaev/search.hpp"

namespace turaev {

namespace {

const ExprField EF;

struct SpecOpts {
    int specializations = 5;
    std::uint64_t seed = 20240901;
};

CheckOptions to_check_options(const SpecOpts& so, const std::string& field,
                              const std::vector<std::string>& assigns, LawFlags flags) {
    CheckOptions opt;
    opt.specializations = so.specializations;
    opt.seed = so.seed;
    opt.flags = flags;
    if (field.rfind("fp:", 0) == 0) opt.prime = std::stoull(field.substr(3));
    else if (field != "rational" && !field.empty())
        throw DataError("unknown field: " + field + " (use rational or fp:<p>)");
    for (const auto& a : assigns) {
        auto eq = a.find('=');
        if (eq == std::string::npos) throw DataError("bad --assign, expected name=value: " + a);
        auto name = a.substr(0, eq);
        auto val = parse_expr(a.substr(eq + 1));
        if (!val.is_constant()) throw DataError("--assign value must be constant: " + a);
        opt.fixed[name] = val.const_value();
    }
    return opt;
}

/// Symbolic derivation with hypotheses and postconditions certified on
/// specialized copies (skipped by --fast).
SymBundle derive_sym(const SymBundle& in, const std::string& name, bool fast,
                     const SpecOpts& so) {
    auto run = [&](auto&& fn_sym, auto&& fn_concrete) {
        if (!fast) {
            RatField f;
            int k = in.parametric() ? so.specializations : 1;
            for (int i = 0; i < k; ++i) {
                auto a = random_assignment(f, in.params, in.forbidden,
                                           so.seed + static_cast<std::uint64_t>(i));
                auto b = specialize(f, in.data, a);
                fn_concrete(f, b); // throws on violated hypotheses/postconditions
            }
        }
        SymBundle out;
        out.data = fn_sym();
        out.params = in.params;
        out.forbidden = in.forbidden;
        out.provenance = in.provenance.empty() ? name : in.provenance + "; " + name;
        return out;
    };

    if (name == "tilde") {
        // replace the operator family by its companion
        auto do_sym = [&] {
            auto b = in.data;
            b.operators["R"] = tilde_operator(EF, b.op_family("R"));
            return b;
        };
        return run(do_sym, [](const RatField& f, Bundle<Rat>& b) {
            b.operators["R"] = tilde_operator(f, b.op_family("R"));
            detail::assert_report<RatField>(check_rota_baxter(f, b), "companion operator");
        });
    }
    if (name == "tridendriform")
        return run([&] { return rb_to_tridendriform(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { rb_to_tridendriform(f, b, true); });
    if (name == "dendriform")
        return run([&] { return rb_to_dendriform(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { rb_to_dendriform(f, b, true); });
    if (name == "tridend-to-dend")
        return run([&] { return tridend_to_dend(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { tridend_to_dend(f, b, true); });
    if (name == "dend-sum")
        return run([&] { return dend_sum_product(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { dend_sum_product(f, b, true); });
    if (name == "tridend-sum")
        return run([&] { return tridend_sum_product(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { tridend_sum_product(f, b, true); });
    if (name == "double-product")
        return run([&] { return rb_double_product(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { rb_double_product(f, b, true); });
    if (name == "dend-to-prelie")
        return run([&] { return dend_to_prelie(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { dend_to_prelie(f, b, true); });
    if (name == "assoc-to-lie")
        return run([&] { return assoc_to_lie(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { assoc_to_lie(f, b, true); });
    if (name == "prelie-to-lie")
        return run([&] { return prelie_to_lie(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { prelie_to_lie(f, b, true); });
    if (name == "rb-lie-to-prelie")
        return run([&] { return rb_lie_to_prelie(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { rb_lie_to_prelie(f, b, true); });
    if (name == "comm-dend-to-zinbiel")
        return run([&] { return comm_dend_to_zinbiel(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { comm_dend_to_zinbiel(f, b, true); });
    if (name == "rb-to-prelie")
        return run([&] { return rb_to_prelie_direct(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { rb_to_prelie_direct(f, b, true); });
    if (name == "rb-to-zinbiel")
        return run([&] { return rb_to_zinbiel(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { rb_to_zinbiel(f, b, true); });
    if (name == "zinbiel-to-dend")
        return run([&] { return zinbiel_to_dend(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { zinbiel_to_dend(f, b, true); });
    if (name == "zinbiel-to-assoc")
        return run([&] { return zinbiel_to_assoc(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { zinbiel_to_assoc(f, b, true); });
    if (name == "prepoisson-to-poisson")
        return run([&] { return prepoisson_to_poisson(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) { prepoisson_to_poisson(f, b, true); });
    if (name == "rbpoisson-to-prepoisson")
        return run([&] { return rbpoisson_to_prepoisson(EF, in.data, false); },
                   [](const RatField& f, Bundle<Rat>& b) {
                       rbpoisson_to_prepoisson(f, b, true);
                   });
    if (name == "coalg-split-dend")
        return run(
            [&] { return coalg_split_from_rb(EF, in.data, SplitVariant::Dendriform, false); },
            [](const RatField& f, Bundle<Rat>& b) {
                coalg_split_from_rb(f, b, SplitVariant::Dendriform, true);
            });
    if (name == "coalg-split-tridend")
        return run(
            [&] { return coalg_split_from_rb(EF, in.data, SplitVariant::Tridendriform, false); },
            [](const RatField& f, Bundle<Rat>& b) {
                coalg_split_from_rb(f, b, SplitVariant::Tridendriform, true);
            });
    if (name == "coalg-sum-dend")
        return run(
            [&] { return coalg_sum_coproduct(EF, in.data, SplitVariant::Dendriform, false); },
            [](const RatField& f, Bundle<Rat>& b) {
                coalg_sum_coproduct(f, b, SplitVariant::Dendriform, true);
            });
    if (name == "coalg-sum-tridend")
        return run(
            [&] { return coalg_sum_coproduct(EF, in.data, SplitVariant::Tridendriform, false); },
            [](const RatField& f, Bundle<Rat>& b) {
                coalg_sum_coproduct(f, b, SplitVariant::Tridendriform, true);
            });
    throw DataError("unknown construction: " + name);
}

int cmd_search(std::ostream& out, const std::string& alg_name, const std::string& field,
               long weight, bool pairs, std::uint64_t budget) {
    if (field.rfind("fp:", 0) != 0)
        throw DataError("search requires --field fp:<p>");
    std::uint64_t p = std::stoull(field.substr(3));
    PrimeField pf(p); // validates primality
    auto alg_sym = corpus::algebra(alg_name);
    FpAlgebra alg;
    alg.p = p;
    alg.dim = alg_sym.dim;
    alg.mul.assign(static_cast<size_t>(alg.dim) * alg.dim * alg.dim, 0);
    Assignment<PrimeField> none;
    for (size_t i = 0; i < alg.mul.size(); ++i) alg.mul[i] = alg_sym.mul.a[i].eval(pf, none);
    std::uint64_t w = pf.from_int(weight);

    SearchOptions so;
    so.budget = budget;
    auto ops = enumerate_rb_operators(alg, w, so);
    out << "algebra " << alg_name << " over F_" << p << ", weight " << w << ": " << ops.size()
        << " operators\n";

    // match each solution against the built-in families, specialized at the
    // same weight over all parameter values that avoid the forbidden loci
    std::map<std::vector<std::uint64_t>, std::string> family_of;
    for (const auto& e : corpus::operator_entries()) {
        if (e.algebra != alg_name) continue;
        auto m = corpus::op_matrix(alg_name, e.letter);
        std::vector<std::string> free_params;
        for (const auto& pr : e.params)
            if (pr != "lambda") free_params.push_back(pr);
        std::vector<Assignment<PrimeField>> assigns;
        size_t combos = 1;
        for (size_t i = 0; i < free_params.size(); ++i) combos *= p;
        for (size_t c = 0; c < combos; ++c) {
            Assignment<PrimeField> a;
            a["lambda"] = w;
            size_t rest = c;
            for (const auto& pr : free_params) {
                a[pr] = rest % p;
                rest /= p;
            }
            bool ok = true;
            for (const auto& fe : e.forbidden) {
                try {
                    if (pf.is_zero(parse_expr(fe).eval(pf, a))) ok = false;
                } catch (const ArithmeticError&) {
                    ok = false;
                }
                if (!ok) break;
            }
            if (ok) assigns.push_back(std::move(a));
        }
        for (const auto& a : assigns) {
            std::vector<std::uint64_t> key;
            bool ok = true;
            for (const auto& entry : m.a) {
                try {
                    key.push_back(entry.eval(pf, a));
                } catch (const ArithmeticError&) {
                    ok = false;
                    break;
                }
            }
            if (ok && !family_of.count(key)) family_of[key] = e.id;
        }
    }

    std::set<std::vector<std::uint64_t>> solution_set;
    for (const auto& m : ops) solution_set.insert(m.a);
    int extra = 0;
    for (const auto& m : ops) {
        out << "  [";
        for (int i = 0; i < m.dim; ++i) {
            if (i) out << "; ";
            for (int j = 0; j < m.dim; ++j) out << (j ? " " : "") << m.at(i, j);
        }
        out << "]";
        auto it = family_of.find(m.a);
        if (it != family_of.end()) out << "  matches " << it->second;
        else {
            out << "  extra (no built-in family specializes to it)";
            ++extra;
        }
        auto t = fp_tilde(alg, m, w);
        if (!solution_set.count(t.a)) {
            out << "  TILDE-CLOSURE VIOLATION\n";
            return 1;
        }
        out << "\n";
    }
    out << "tilde closure holds; " << extra << " extra solutions\n";
    for (const auto& [key, id] : family_of) {
        if (!solution_set.count(key)) {
            out << "MISSING: specialized family " << id << " not found by enumeration\n";
            return 1;
        }
    }
    if (pairs) {
        auto prs = enumerate_rb_pairs(alg, w, ops);
        out << prs.size() << " ordered pairs satisfy the pair laws\n";
    }
    return 0;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computer algebra for graded Rota-Baxter structures"};
    app.require_subcommand(1);

    SpecOpts so;
    std::string field = "rational";
    std::vector<std::string> assigns;

    // check
    auto* check = app.add_subcommand("check", "verify a law on a bundle file");
    std::string law, bundle_path;
    bool unital = false, commutative = false, counital = false;
    check->add_option("--law", law, "law name")->required();
    check->add_option("bundle", bundle_path, "bundle file")->required();
    check->add_flag("--unital", unital);
    check->add_flag("--commutative", commutative);
    check->add_flag("--counital", counital);
    check->add_option("--specializations", so.specializations);
    check->add_option("--seed", so.seed);
    check->add_option("--field", field, "rational (default) or fp:<p>");
    check->add_option("--assign", assigns, "fix a parameter, name=value");

    // derive
    auto* derive = app.add_subcommand("derive", "run a construction on a bundle file");
    std::string construction, out_path;
    bool fast = false;
    derive->add_option("--construction", construction)->required();
    derive->add_option("bundle", bundle_path)->required();
    derive->add_option("--out", out_path, "output bundle file");
    derive->add_flag("--fast", fast, "skip certification passes");
    derive->add_option("--specializations", so.specializations);
    derive->add_option("--seed", so.seed);

    // dualize
    auto* dual = app.add_subcommand("dualize", "transpose a bundle file");
    dual->add_option("bundle", bundle_path)->required();
    dual->add_option("--out", out_path);

    // search
    auto* search = app.add_subcommand("search", "enumerate operators over a prime field");
    std::string alg_name = "dim2";
    long weight = 1;
    bool want_pairs = false;
    std::uint64_t budget = 2'000'000;
    search->add_option("--algebra", alg_name, "dim2 | dim3 | taft");
    search->add_option("--field", field, "fp:<p>")->required();
    search->add_option("--weight", weight);
    search->add_flag("--pairs", want_pairs);
    search->add_option("--budget", budget);

    // paper
    auto* paper = app.add_subcommand("paper", "work with the built-in example corpus");
    paper->require_subcommand(1);
    std::string example_id;
    bool with_tables = false;
    auto* verify = paper->add_subcommand("verify", "recompute checks and compare to the corpus");
    verify->add_option("--example", example_id);
    verify->add_flag("--tables", with_tables, "include table comparisons in a full run");
    verify->add_option("--specializations", so.specializations);
    verify->add_option("--seed", so.seed);
    auto* diff = paper->add_subcommand("diff", "compare a printed table to its derivation");
    diff->add_option("--example", example_id)->required();
    diff->add_option("--specializations", so.specializations);
    diff->add_option("--seed", so.seed);
    auto* list = paper->add_subcommand("list", "list corpus entry ids");
    (void)list;
    auto* dump = paper->add_subcommand("dump", "write a corpus entry as a bundle file");
    dump->add_option("--example", example_id)->required();
    dump->add_option("--out", out_path);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (check->parsed()) {
        auto sb = load_bundle_file(bundle_path);
        auto opt = to_check_options(so, field, assigns,
                                    {.unital = unital, .commutative = commutative,
                                     .counital = counital});
        auto rep = check_bundle(sb, law, opt);
        out << rep.to_text();
        return rep.pass ? 0 : 1;
    }
    if (derive->parsed()) {
        auto sb = load_bundle_file(bundle_path);
        auto result = derive_sym(sb, construction, fast, so);
        auto text = save_bundle(result);
        if (out_path.empty()) out << text;
        else save_bundle_file(result, out_path);
        return 0;
    }
    if (dual->parsed()) {
        auto sb = load_bundle_file(bundle_path);
        SymBundle result;
        result.data = dualize(EF, sb.data);
        result.params = sb.params;
        result.forbidden = sb.forbidden;
        result.provenance = sb.provenance.empty() ? "dualized" : sb.provenance + "; dualized";
        auto text = save_bundle(result);
        if (out_path.empty()) out << text;
        else save_bundle_file(result, out_path);
        return 0;
    }
    if (search->parsed()) return cmd_search(out, alg_name, field, weight, want_pairs, budget);

    if (verify->parsed()) {
        auto res = corpus::verify_entries(example_id, so.specializations, so.seed);
        bool comparison_failed = false;
        for (const auto& l : res.lines) {
            out << l.entry << " " << l.check << ": "
                << (l.pass ? "PASS" : l.known_discrepancy ? "KNOWN DISCREPANCY (reproduced)"
                                                          : "FAIL");
            if (!l.detail.empty()) out << " -- " << l.detail;
            out << "\n";
            if (!l.pass && !l.known_discrepancy) comparison_failed = true;
        }
        // table comparisons: for a single table example, or with --tables
        std::vector<const corpus::TableEntry*> tables;
        if (!example_id.empty()) {
            auto n = corpus::normalize_id(example_id);
            for (const auto& t : corpus::table_entries())
                if (t.id == n) tables.push_back(&t);
        } else if (with_tables) {
            for (const auto& t : corpus::table_entries()) tables.push_back(&t);
        }
        for (const auto* t : tables) {
            auto d = corpus::table_diff(*t, so.specializations, so.seed);
            for (const auto& n : d.notes) out << t->id << " note: " << n << "\n";
            for (const auto& dl : d.diffs) {
                out << t->id << " diff " << dl.cell.op << "(u" << dl.cell.ai + 1 << " "
                    << dl.cell.ag << ", u" << dl.cell.bi + 1 << " " << dl.cell.bg
                    << "): printed " << dl.printed << "  derived " << dl.derived
                    << (dl.known ? "  [known]" : "  [UNEXPECTED]") << "\n";
                comparison_failed = true;
            }
            out << t->id << ": " << d.diffs.size() << " diff cells\n";
        }
        return comparison_failed ? 1 : 0;
    }
    if (diff->parsed()) {
        const auto& t = corpus::find_table(example_id);
        auto d = corpus::table_diff(t, so.specializations, so.seed);
        for (const auto& n : d.notes) out << "note: " << n << "\n";
        out << "derived table law check: " << (d.derived_law.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& dl : d.diffs)
            out << "diff " << dl.cell.op << "(u" << dl.cell.ai + 1 << " " << dl.cell.ag << ", u"
                << dl.cell.bi + 1 << " " << dl.cell.bg << "): printed " << dl.printed
                << "  derived " << dl.derived << (dl.known ? "  [known]" : "  [UNEXPECTED]")
                << "\n";
        out << d.diffs.size() << " diff cells\n";
        return d.diffs.empty() && d.derived_law.pass ? 0 : 1;
    }
    if (list->parsed()) {
        for (const auto& id : corpus::all_ids()) out << id << "\n";
        return 0;
    }
    if (dump->parsed()) {
        auto sb = corpus::bundle_for_id(example_id);
        if (!sb) throw DataError("no bundle for id " + example_id);
        if (out_path.empty()) out << save_bundle(*sb);
        else save_bundle_file(*sb, out_path);
        return 0;
    }
    return 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1; // failed postcondition certification
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace turaev
