#include "kronlift/cli.hpp"

#include "kronlift/counterexamples.hpp"
#include "kronlift/error.hpp"
#include "kronlift/gentest.hpp"
#include "kronlift/lifting.hpp"
#include "kronlift/ranks.hpp"
#include "kronlift/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace kronlift {

namespace {

struct Document {
    Json raw;
    FieldPtr field;
    GroupShape shape;
};

Json read_json(const std::string &path, std::istream &in) {
    try {
        if (path == "-")
            return Json::parse(in);
        std::ifstream f(path);
        if (!f)
            throw Error(Errc::MalformedInput, "cannot open " + path);
        return Json::parse(f);
    } catch (const Json::parse_error &e) {
        throw Error(Errc::MalformedInput, std::string("invalid JSON: ") + e.what());
    }
}

Document read_problem(const std::string &path, std::istream &in) {
    Document d;
    d.raw = read_json(path, in);
    if (!d.raw.is_object())
        throw Error(Errc::MalformedInput, "problem document must be a JSON object");
    if (!d.raw.contains("field"))
        throw Error(Errc::MalformedInput, "missing key \"field\"");
    if (!d.raw.contains("shape"))
        throw Error(Errc::MalformedInput, "missing key \"shape\"");
    d.field = parse_field(d.raw.at("field"));
    d.shape = parse_shape(d.raw.at("shape"));
    return d;
}

std::vector<GroupElement> elements_at(const Document &d, const char *key, bool required = true) {
    if (!d.raw.contains(key)) {
        if (required)
            throw Error(Errc::MalformedInput, std::string("missing key \"") + key + "\"");
        return {};
    }
    return parse_elements(d.raw.at(key), d.shape, d.field);
}

Json verdict_json(const GenerationVerdict &v) {
    Json j{{"generates", v.generates}};
    if (v.character)
        j["character"] = covector_to_json(*v.character);
    if (v.generates && !v.subset.empty())
        j["subset"] = v.subset;
    if (!v.reason.empty())
        j["reason"] = v.reason;
    return j;
}

Json descriptor_json(const ClosedSubgroupDescriptor &d) {
    return {{"dim", d.dim()},
            {"component_count", integer_to_json(d.component_count())},
            {"discrete_rank", d.discrete_rank()},
            {"full_group", is_full_group(d)},
            {"vanishing", rows_to_json(d.vanishing())},
            {"integral", rows_to_json(d.integral())}};
}

std::size_t count_at(const Json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0)
        throw Error(Errc::MalformedInput, std::string("\"") + key + "\" must be a nonnegative integer");
    return j.at(key).get<std::size_t>();
}

bool bool_at(const Json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_boolean())
        throw Error(Errc::MalformedInput, std::string("\"") + key + "\" must be a boolean");
    return j.at(key).get<bool>();
}

std::vector<IsotypicDescriptor> parse_isotypic(const Json &j) {
    if (!j.is_array())
        throw Error(Errc::MalformedInput, "\"isotypic\" must be an array");
    std::vector<IsotypicDescriptor> out;
    for (const auto &c : j)
        out.push_back({count_at(c, "multiplicity"), count_at(c, "schur_dim"),
                       count_at(c, "sigma_dim_over_k")});
    return out;
}

Json bound_json(const GaschutzBound &b) {
    if (b.exact())
        return {{"exact", b.lower}};
    return {{"lower", b.lower}, {"upper", b.upper}};
}

Json ranks(const Json &doc) {
    if (!doc.is_object())
        throw Error(Errc::MalformedInput, "ranks document must be a JSON object");
    Json out = Json::object();
    if (doc.contains("shape")) {
        GroupShape s = parse_shape(doc.at("shape"));
        out["d"] = d_abelian(s);
        out["redundancy_rank"] = redundancy_rank_abelian(s);
        out["gaschutz_rank"] = {{"exact", gaschutz_rank_abelian(s)}};
    }
    if (doc.contains("structure")) {
        const Json &st = doc.at("structure");
        LieStructure ls{count_at(st, "d_G"), count_at(st, "dim_ab"), count_at(st, "dim_T"),
                        bool_at(st, "ab_noncompact"), bool_at(st, "G_compact")};
        out["gaschutz_bound"] = bound_json(gaschutz_bound(ls));
    }
    if (doc.contains("isotypic")) {
        auto isos = parse_isotypic(doc.at("isotypic"));
        out["d_module"] = d_module(isos);
        if (doc.contains("d_L"))
            out["d_abels_noskov"] = d_abels_noskov(count_at(doc, "d_L"), isos);
    }
    if (doc.contains("reductive")) {
        const Json &r = doc.at("reductive");
        out["d_reductive"] = d_reductive(count_at(r, "d_S"), count_at(r, "d_A"));
    }
    if (out.empty())
        throw Error(Errc::MalformedInput,
                    "ranks document needs one of shape, structure, isotypic, reductive");
    return out;
}

Json counterexample(const std::string &family, std::size_t n, std::size_t m, long bound) {
    if (family == "lowerbound") {
        LowerBoundInstance inst = lowerbound_instance(n, m);
        Json j{{"family", family},
               {"field", field_to_json(*inst.field)},
               {"source_shape", shape_to_json(inst.source_shape)},
               {"target_shape", shape_to_json(inst.target_shape)},
               {"quotient", rows_to_json(inst.quotient.psi_inverse)},
               {"h_tuple", elements_to_json(inst.h_tuple)},
               {"h_tuple_generates", true}};
        if (bound > 0) {
            j["verify_bound"] = bound;
            j["no_lift_found"] = verify_no_lift_bounded(inst, bound);
        }
        return j;
    }
    if (family == "torus") {
        if (n == 0)
            throw Error(Errc::PreconditionViolated, "torus family needs n >= 1");
        TorusNonliftInstance inst = torus_nonlift_instance(n);
        Json j{{"family", family},
               {"field", field_to_json(*sqrt2_field())},
               {"shape", shape_to_json({0, n})},
               {"delta_gens", elements_to_json(inst.delta_gens)},
               {"gs", elements_to_json(inst.gs)}};
        if (bound > 0) {
            TorusSweepReport r = verify_torus_nonlift_bounded(inst, bound);
            j["verify_bound"] = bound;
            j["dense"] = r.dense;
            j["lifts_checked"] = r.lifts_checked;
            j["orbits_checked"] = r.orbits_checked;
            j["lifts_generating"] = r.lifts_generating;
            j["witnesses_valid"] = r.witnesses_valid;
            j["no_lift_found"] = r.lifts_generating == 0 && r.witnesses_valid == r.lifts_checked;
        }
        return j;
    }
    throw Error(Errc::MalformedInput, "unknown family \"" + family + "\"");
}

int exit_code_for(Errc c) {
    switch (c) {
    case Errc::MalformedInput:
    case Errc::NonMonic:
    case Errc::NoRealRootIsolated:
    case Errc::ShapeMismatch:
    case Errc::FieldMismatch:
    case Errc::ReducibleMinimalPolynomial:
        return ExitMalformed;
    case Errc::RankTooSmall:
    case Errc::NotDense:
    case Errc::NotGenerating:
    case Errc::FieldTooSmall:
    case Errc::PreconditionViolated:
    case Errc::EmptyModule:
    case Errc::InvalidStructure:
        return ExitPrecondition;
    default:
        return ExitInternal;
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"Exact topological generation in R^n x T^m", "kronlift"};
    app.require_subcommand(1);

    std::string path = "-";
    auto *gen = app.add_subcommand("generates", "decide topological generation of \"elements\"");
    gen->add_option("problem", path, "problem JSON (- for stdin)");
    std::uint64_t seed = 0;
    std::size_t samples = 10000, grid = 10000;
    auto *seed_opt = gen->add_option("--seed", seed, "run the density oracle with this seed");
    gen->add_option("--samples", samples, "density oracle sample count")->needs(seed_opt);
    gen->add_option("--grid", grid, "density oracle total cell budget")->needs(seed_opt);

    auto *clo = app.add_subcommand("closure", "closure of the subgroup generated by \"elements\"");
    clo->add_option("problem", path, "problem JSON (- for stdin)");

    auto *irr = app.add_subcommand("irredundant", "irredundant generating sublist of \"elements\"");
    irr->add_option("problem", path, "problem JSON (- for stdin)");
    bool witness = false;
    irr->add_flag("--witness", witness, "emit the standard irredundant set of size 2n+m instead");

    auto *lift = app.add_subcommand("lift", "lift \"gs\" through G -> G / closure(\"delta_gens\")");
    lift->add_option("problem", path, "problem JSON (- for stdin)");

    auto *rk = app.add_subcommand("ranks", "rank formulas for a structure document");
    rk->add_option("problem", path, "structure JSON (- for stdin)");

    auto *ce = app.add_subcommand("counterexample", "build and check non-liftable families");
    std::string family;
    std::size_t n = 0, m = 0;
    long bound = 0;
    ce->add_option("--family", family, "lowerbound or torus")
        ->required()
        ->check(CLI::IsMember({"lowerbound", "torus"}));
    ce->add_option("--n", n, "n");
    ce->add_option("--m", m, "m (lowerbound family only)");
    ce->add_option("--verify-bound", bound, "exhaust lift parameters in [-B, B]")
        ->check(CLI::NonNegativeNumber);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return ExitMalformed;
    }

    try {
        Json result;
        if (gen->parsed()) {
            Document d = read_problem(path, in);
            auto xs = elements_at(d, "elements");
            GenerationVerdict v = generates(xs, d.shape, d.field);
            result = verdict_json(v);
            if (v.character && !character_annihilates(*v.character, xs, d.shape))
                throw Error(Errc::InternalVerificationFailed, "failure witness does not verify");
            if (*seed_opt) {
                DensityReport r = density_oracle(xs, d.shape, samples, grid, seed);
                result["density"] = {{"seed", seed},
                                     {"samples", samples},
                                     {"resolution", r.resolution},
                                     {"cells", r.cells},
                                     {"hit", r.hit},
                                     {"coverage", r.coverage}};
            }
        } else if (clo->parsed()) {
            Document d = read_problem(path, in);
            result = descriptor_json(closure(elements_at(d, "elements"), d.shape, d.field));
        } else if (irr->parsed()) {
            Document d = read_problem(path, in);
            if (witness) {
                result = {{"elements", elements_to_json(irredundant_witness(d.shape, d.field))}};
            } else {
                auto xs = elements_at(d, "elements");
                auto keep = extract_irredundant(xs, d.shape, d.field);
                std::vector<GroupElement> kept;
                for (auto i : keep)
                    kept.push_back(xs[i]);
                result = {{"indices", keep}, {"elements", elements_to_json(kept)}};
            }
        } else if (lift->parsed()) {
            Document d = read_problem(path, in);
            LiftProblem p{d.shape, elements_at(d, "gs"), elements_at(d, "delta_gens", false)};
            LiftWitness w = lift_generators(p, d.field);
            result = {{"delta_coeffs", matz_to_json(w.delta_coeffs)},
                      {"lifted", elements_to_json(w.lifted)},
                      {"lifted_generates", generates(w.lifted, d.shape, d.field).generates}};
        } else if (rk->parsed()) {
            result = ranks(read_json(path, in));
        } else if (ce->parsed()) {
            result = counterexample(family, n, m, bound);
        }
        out << result.dump(2) << "\n";
        return ExitOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const Json::exception &e) {
        err << "error: MalformedInput: " << e.what() << "\n";
        return ExitMalformed;
    }
}

} // namespace kronlift
