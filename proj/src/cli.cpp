#include "altext/cli.hpp"

#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "altext/biext.hpp"
#include "altext/cochain_io.hpp"
#include "altext/commutator.hpp"
#include "altext/multiext.hpp"
#include "altext/obstruction.hpp"

namespace altext {

namespace {

std::int64_t env_cap(const char* name, std::int64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long long parsed = std::strtoll(v, &end, 10);
    if (end == v || *end != '\0' || parsed <= 0) return fallback;
    return parsed;
}

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& name,
          const Cochain& c) {
    if (path) {
        save_cochain(c, *path + "." + name + ".coc");
    } else {
        out << "# " << name << "\n" << serialize_cochain(c);
    }
}

struct Options {
    std::string command;
    std::string kind;
    std::vector<std::string> files;
    std::optional<std::string> out_prefix;
    std::string b_spec, a_spec;
    int degree = 0;
    std::string method = "snf";
    std::uint64_t seed = 0;
    std::string cls = "any";
};

int dispatch(const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cocycle calculus on finite abelian groups"};
    app.require_subcommand(1);
    Options opt;

    auto* validate = app.add_subcommand("validate", "check the cocycle condition of a cochain file");
    validate->add_option("file", opt.files, "cochain file")->required()->expected(1);

    auto* derive = app.add_subcommand("derive", "derive structure from a cocycle");
    derive->add_option("kind", opt.kind, "commutator | trilinear | triext | families")
        ->required()
        ->check(CLI::IsMember({"commutator", "trilinear", "triext", "families"}));
    derive->add_option("file", opt.files, "cochain file")->required()->expected(1);
    std::string derive_prefix;
    auto* derive_out = derive->add_option("--out-prefix", derive_prefix, "write PREFIX.<name>.coc files");

    auto* solve = app.add_subcommand("solve", "solve a trivialization system");
    solve->add_option("kind", opt.kind, "biext-triv | alt-triv | braiding | picard-split | theta")
        ->required()
        ->check(CLI::IsMember({"biext-triv", "alt-triv", "braiding", "picard-split", "theta"}));
    solve->add_option("files", opt.files, "input cochain files")->required();
    std::string solve_prefix;
    auto* solve_out = solve->add_option("--out-prefix", solve_prefix, "write PREFIX.<name>.coc files");

    auto* cohomology_cmd = app.add_subcommand("cohomology", "invariant factors of H^n(B, A)");
    cohomology_cmd->add_option("--B", opt.b_spec, "base group, e.g. 2,2")->required();
    cohomology_cmd->add_option("--A", opt.a_spec, "coefficient group")->required();
    cohomology_cmd->add_option("--degree", opt.degree, "cohomological degree n >= 1")->required();
    cohomology_cmd->add_option("--method", opt.method, "snf | enumerate")
        ->check(CLI::IsMember({"snf", "enumerate"}));

    auto* random_cmd = app.add_subcommand("random", "deterministic random cochain");
    random_cmd->add_option("--B", opt.b_spec, "base group")->required();
    random_cmd->add_option("--A", opt.a_spec, "coefficient group")->required();
    random_cmd->add_option("--degree", opt.degree, "arity n >= 1")->required();
    random_cmd->add_option("--seed", opt.seed, "random seed");
    random_cmd->add_option("--class", opt.cls, "any | coboundary")
        ->check(CLI::IsMember({"any", "coboundary"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (validate->parsed()) opt.command = "validate";
    if (derive->parsed()) {
        opt.command = "derive";
        if (*derive_out) opt.out_prefix = derive_prefix;
    }
    if (solve->parsed()) {
        opt.command = "solve";
        if (*solve_out) opt.out_prefix = solve_prefix;
    }
    if (cohomology_cmd->parsed()) opt.command = "cohomology";
    if (random_cmd->parsed()) opt.command = "random";

    try {
        return dispatch(opt, out, err);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int dispatch(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.command == "validate") {
        Cochain c = load_cochain(opt.files[0]);
        CheckReport report = is_cocycle(c);
        out << report.summary() << "\n";
        return report.ok() ? 0 : 1;
    }

    if (opt.command == "derive") {
        Cochain f = load_cochain(opt.files[0]);
        if (opt.kind == "commutator") {
            GrCategoryData c(std::move(f));
            BiextPair pair = derive_commutator_pair(c);
            emit(out, opt.out_prefix, "g", pair.g);
            emit(out, opt.out_prefix, "h", pair.h);
            return 0;
        }
        if (opt.kind == "trilinear") {
            GrCategoryData c(std::move(f));
            Cochain phi = trilinear_map(c);
            const bool obstructed = !phi.is_zero();
            if (obstructed) out << "# nonzero trilinear obstruction\n";
            emit(out, opt.out_prefix, "trilinear", phi);
            return obstructed ? 1 : 0;
        }
        if (opt.kind == "families") {
            FourCocycleData c(std::move(f));
            DerivedFamilies fam = derive_22ext_families(c);
            emit(out, opt.out_prefix, "psi", fam.psi);
            emit(out, opt.out_prefix, "phi", fam.phi);
            emit(out, opt.out_prefix, "chi", fam.chi);
            return 0;
        }
        FourCocycleData c(std::move(f));
        try {
            TriextData t = derive_triext(c);
            emit(out, opt.out_prefix, "g1", t.g1);
            emit(out, opt.out_prefix, "g2", t.g2);
            emit(out, opt.out_prefix, "g3", t.g3);
            return 0;
        } catch (const ObstructionError& e) {
            out << "# obstruction: " << e.what() << "\n";
            emit(out, opt.out_prefix, "obstruction", e.obstruction());
            return 1;
        }
    }

    if (opt.command == "solve") {
        const auto need = [&](std::size_t n, const char* what) {
            if (opt.files.size() != n)
                throw std::invalid_argument("solve " + opt.kind + " expects " + std::to_string(n) +
                                            " file(s): " + what);
        };
        if (opt.kind == "biext-triv") {
            need(2, "G H");
            BiextPair p = make_biext_pair(load_cochain(opt.files[0]), load_cochain(opt.files[1]));
            auto k = trivialize_biext(p);
            if (!k) {
                out << "unsolvable: the pair is not trivial as a biextension\n";
                return 1;
            }
            emit(out, opt.out_prefix, "k", *k);
            return 0;
        }
        if (opt.kind == "alt-triv") {
            need(4, "G H PHI U");
            AltQuadruple q{make_biext_pair(load_cochain(opt.files[0]), load_cochain(opt.files[1])),
                           load_cochain(opt.files[2]), load_cochain(opt.files[3])};
            auto k = trivialize_alternating(q);
            if (!k) {
                out << "unsolvable: the quadruple is not trivial as an alternating biextension\n";
                return 1;
            }
            emit(out, opt.out_prefix, "k", *k);
            return 0;
        }
        if (opt.kind == "braiding") {
            need(1, "F");
            GrCategoryData c(load_cochain(opt.files[0]));
            BraidingSolutions sols = solve_braiding(c, env_cap("ALTEXT_SOLUTION_BOUND", 512));
            if (!sols.solvable) {
                out << "no braiding: the hexagon system is unsolvable\n";
                return 1;
            }
            if (sols.complete) {
                out << "# " << sols.all.size() << " braiding(s)\n";
                for (std::size_t i = 0; i < sols.all.size(); ++i)
                    emit(out, opt.out_prefix, "braiding" + std::to_string(i), sols.all[i]);
            } else {
                out << "# solution set exceeds the bound; particular solution and kernel generators\n";
                emit(out, opt.out_prefix, "braiding", *sols.particular);
                for (std::size_t i = 0; i < sols.kernel.size(); ++i)
                    emit(out, opt.out_prefix, "kernel" + std::to_string(i), sols.kernel[i]);
            }
            return 0;
        }
        if (opt.kind == "picard-split") {
            need(2, "F G2");
            GrCategoryData c(load_cochain(opt.files[0]));
            BraidingData b{std::move(c), load_cochain(opt.files[1])};
            auto h = solve_picard_trivialization(b);
            if (!h) {
                out << "anomaly: strict Picard data with no splitting; this contradicts the vanishing "
                       "of Ext^2 for abstract abelian groups\n";
                return 1;
            }
            emit(out, opt.out_prefix, "h", *h);
            return 0;
        }
        need(3, "G1 G2 G3");
        TriextData t = make_triext(load_cochain(opt.files[0]), load_cochain(opt.files[1]),
                                   load_cochain(opt.files[2]));
        auto theta = solve_theta(t);
        if (!theta) {
            out << "unsolvable: the triextension admits no alternating trivialization\n";
            return 1;
        }
        emit(out, opt.out_prefix, "theta", *theta);
        return 0;
    }

    if (opt.command == "cohomology") {
        CohomologyOptions caps;
        caps.enumeration_bound = env_cap("ALTEXT_ENUM_BOUND", caps.enumeration_bound);
        caps.snf_row_cap = env_cap("ALTEXT_SNF_ROW_CAP", caps.snf_row_cap);
        auto factors = cohomology(FinAbGroup::parse(opt.b_spec), FinAbGroup::parse(opt.a_spec), opt.degree,
                                  opt.method == "snf" ? CohomologyMethod::snf : CohomologyMethod::enumeration,
                                  caps);
        if (factors.empty()) {
            out << "trivial\n";
        } else {
            for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? " " : "") << factors[i];
            out << "\n";
        }
        return 0;
    }

    if (opt.command == "random") {
        Cochain c = random_cochain(FinAbGroup::parse(opt.b_spec), FinAbGroup::parse(opt.a_spec), opt.degree,
                                   opt.seed, opt.cls == "any" ? RandomClass::any : RandomClass::coboundary);
        if (opt.out_prefix)
            save_cochain(c, *opt.out_prefix + ".coc");
        else
            out << serialize_cochain(c);
        return 0;
    }

    err << "unknown command\n";
    return 2;
}

}  // namespace

}  // namespace altext
