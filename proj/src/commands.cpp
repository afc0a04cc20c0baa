#include "detrep/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "detrep/generators.hpp"
#include "detrep/io.hpp"

namespace detrep {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

struct FieldSpec {
    FieldTag tag = FieldTag::Rationals;
    std::uint64_t prime = 0;
};

FieldSpec parse_field_spec(const std::string& s) {
    FieldSpec f;
    if (s == "q") return f;
    if (s.rfind("p:", 0) == 0) {
        f.tag = FieldTag::Prime;
        try {
            f.prime = std::stoull(s.substr(2));
        } catch (const std::exception&) {
            throw ParseError("bad --field value: " + s);
        }
        return f;
    }
    throw ParseError("--field must be q or p:<prime>");
}

void activate_field(const FileHeader& h) {
    if (h.field == FieldTag::Prime) Fp::set_modulus(h.prime);
}

template <class K>
const LinFormMatrix<K>& need_linform(const Instance<K>& inst, const char* what) {
    const auto* m = inst.template first_of<LinFormMatrix<K>>();
    if (!m) throw ParseError(std::string("file contains no linform-matrix (") + what + ")");
    return *m;
}

template <class K>
const ParamCurve<K>& need_curve(const Instance<K>& inst) {
    const auto* c = inst.template first_of<ParamCurve<K>>();
    if (!c) throw ParseError("file contains no curve");
    return *c;
}

std::string human_of(Disambiguation d) {
    switch (d) {
        case Disambiguation::Plain: return "plain";
        case Disambiguation::Transpose: return "transpose";
        default: return "undecided";
    }
}

// ------------------------------------------------------------------
// per-command implementations, templated over the coefficient field

struct Options {
    std::string file_a, file_b, file_cert, reference, out_path, field_spec = "q", kind;
    std::uint64_t seed = 1;
    std::size_t trials = 20;
    std::size_t r = 1, g = 4, degree = 3;
    bool transposed = false;
};

template <class K>
int cmd_det(const Instance<K>& inst, const Options& opt, std::ostream& out) {
    const auto& m = need_linform(inst, "det");
    const MultiPoly<K> det = determinant_hypersurface(m);
    out << human_multipoly(det) << "\n";
    if (!opt.out_path.empty()) {
        Instance<K> result;
        result.header = inst.header;
        result.objects.emplace_back("det", det);
        write_file(opt.out_path, serialize_instance(result));
    }
    return 0;
}

template <class K>
int cmd_tangent_cone(const Instance<K>& inst, const Options& opt, std::ostream& out) {
    const auto* f = inst.template first_of<MultiPoly<K>>();
    if (!f) throw ParseError("file contains no multipoly");
    std::vector<K> point(f->nvars(), K(0));
    if (const auto* pc = inst.template first_of<PointCloudCurve<K>>()) {
        if (pc->points().empty() || pc->ambient() != f->nvars())
            throw ParseError("recentering point has the wrong dimension");
        point = pc->points().front();
    }
    const LeadingForm<K> lead = tangent_cone_leading_form(*f, point);
    out << "multiplicity " << lead.multiplicity << "\n";
    out << "leading-form " << human_multipoly(lead.form) << "\n";
    if (!opt.out_path.empty()) {
        Instance<K> result;
        result.header = inst.header;
        result.objects.emplace_back("leading_form", lead.form);
        result.objects.emplace_back("multiplicity",
                                    TagObject<K>{std::to_string(lead.multiplicity)});
        write_file(opt.out_path, serialize_instance(result));
    }
    return 0;
}

template <class K>
int cmd_check_generic(const Instance<K>& inst, const Options& opt, std::ostream& out) {
    const auto& m = need_linform(inst, "check-generic");
    const bool independent = entry_independence_check(m);
    Rng rng(opt.seed);
    const bool generic = independent && genericity_probe(m, opt.trials, rng);
    out << "entry-independence " << (independent ? "ok" : "failed") << "\n";
    out << "minor-probe " << (generic ? "ok" : "failed") << "\n";
    return (independent && generic) ? 0 : 1;
}

template <class K>
int cmd_frobenius(const Instance<K>& inst_a, const Instance<K>& inst_b, const Options& opt,
                  std::ostream& out) {
    const auto& a = need_linform(inst_a, "A");
    const auto& b = need_linform(inst_b, "B");
    const FrobeniusOutcome<K> outcome = frobenius_decompose(a, b);
    if (!outcome.certificate) {
        out << "not-equivalent: " << outcome.witness << "\n";
        return 1;
    }
    out << "equivalent transposed=" << (outcome.certificate->transposed ? 1 : 0)
        << " c=" << ScalarIO<K>::print(outcome.certificate->c) << "\n";
    if (!opt.out_path.empty()) {
        Instance<K> result;
        result.header = inst_a.header;
        result.objects.emplace_back("cert", *outcome.certificate);
        write_file(opt.out_path, serialize_instance(result));
    }
    return 0;
}

template <class K>
int cmd_verify(const Instance<K>& inst_a, const Instance<K>& inst_b, const Instance<K>& inst_c,
               std::ostream& out) {
    const auto& a = need_linform(inst_a, "A");
    const auto& b = need_linform(inst_b, "B");
    const auto* cert = inst_c.template first_of<EquivalenceCertificate<K>>();
    if (!cert) throw ParseError("certificate file contains no certificate");
    const bool ok = verify_certificate(a, b, *cert);
    out << (ok ? "certificate valid" : "certificate invalid") << "\n";
    return ok ? 0 : 1;
}

template <class K>
int cmd_restrict(const Instance<K>& inst, const Options& opt, std::ostream& out) {
    const auto& m = need_linform(inst, "restrict");
    const auto& c = need_curve(inst);
    const Matrix<UniPoly<K>> restricted = restrict_to_param_curve(m, c);
    for (std::size_t i = 0; i < restricted.rows(); ++i) {
        for (std::size_t j = 0; j < restricted.cols(); ++j)
            out << (j ? " | " : "") << human_unipoly(restricted(i, j));
        out << "\n";
    }
    if (!opt.out_path.empty()) {
        Instance<K> result;
        result.header = inst.header;
        result.objects.emplace_back("restricted", restricted);
        write_file(opt.out_path, serialize_instance(result));
    }
    return 0;
}

template <class K>
int cmd_rank_profile(const Instance<K>& inst, std::ostream& out) {
    Matrix<UniPoly<K>> m;
    if (const auto* direct = inst.template first_of<Matrix<UniPoly<K>>>()) {
        m = *direct;
    } else {
        m = restrict_to_param_curve(need_linform(inst, "rank-profile"), need_curve(inst));
    }
    const RankProfile<K> profile = rank_profile(m);
    out << "generic-rank " << profile.generic_rank << "\n";
    out << "drops " << profile.drop_locus.size() << "\n";
    for (const auto& [factor, rank] : profile.drop_locus)
        out << "drop rank " << rank << " at roots of " << human_unipoly(factor) << "\n";
    return 0;
}

template <class K>
int cmd_reconstruct(const Instance<K>& inst, const Options& opt, std::ostream& out) {
    const auto& alpha = need_linform(inst, "reconstruct");
    const auto& curve = need_curve(inst);
    const LinFormMatrix<K>* reference = nullptr;
    Instance<K> ref_inst;
    if (!opt.reference.empty()) {
        ref_inst = parse_instance<K>(read_file(opt.reference));
        reference = &need_linform(ref_inst, "reference");
    }
    const ReconstructionReport<K> report = reconstruct_bundle_pair(alpha, curve, reference);

    out << "containment " << (report.containment_ok ? "ok" : "failed") << "\n";
    out << "generic-rank " << report.rank_profile.generic_rank << "\n";
    out << "drops " << report.rank_profile.drop_locus.size() << "\n";
    out << "disambiguation " << human_of(report.disambiguation) << "\n";
    out << "degree-invariant plain=" << report.candidate_plain.degree_invariant
        << " transpose=" << report.candidate_transpose.degree_invariant
        << " kernel=" << report.kernel_line.degree_invariant << "\n";
    auto print_basis = [&](const char* label, const SheafBasis<K>& sb) {
        out << label << ":\n";
        for (std::size_t i = 0; i < sb.basis.rows(); ++i) {
            out << "  ";
            for (std::size_t j = 0; j < sb.basis.cols(); ++j)
                out << (j ? " | " : "") << human_unipoly(sb.basis(i, j));
            out << "\n";
        }
    };
    print_basis("candidate-plain", report.candidate_plain);
    print_basis("candidate-transpose", report.candidate_transpose);
    print_basis("kernel-line", report.kernel_line);

    if (!opt.out_path.empty()) {
        Instance<K> result;
        result.header = inst.header;
        result.objects.emplace_back("candidate_plain", report.candidate_plain.basis);
        result.objects.emplace_back("candidate_transpose", report.candidate_transpose.basis);
        result.objects.emplace_back("kernel_line", report.kernel_line.basis);
        result.objects.emplace_back("disambiguation",
                                    TagObject<K>{human_of(report.disambiguation)});
        result.objects.emplace_back(
            "generic_rank", TagObject<K>{std::to_string(report.rank_profile.generic_rank)});
        write_file(opt.out_path, serialize_instance(result));
    }
    return 0;
}

template <class K>
int cmd_gen(const Options& opt, const FieldSpec& field, std::ostream& out) {
    Instance<K> result;
    result.header.field = field.tag;
    result.header.prime = field.prime;
    result.header.r = opt.r;
    result.header.g = opt.g;
    if (field.tag == FieldTag::Prime && field.prime <= opt.r + 1)
        throw ParseError("prime-field modulus must exceed r+1");

    if (opt.kind == "frobenius") {
        const FrobeniusInstance<K> inst =
            gen_frobenius_instance<K>(opt.r, opt.g, opt.transposed, opt.seed);
        result.objects.emplace_back("A", inst.a);
        result.objects.emplace_back("B", inst.b);
        result.objects.emplace_back("S0", inst.s0);
        result.objects.emplace_back("T0", inst.t0);
        result.objects.emplace_back("transposed", TagObject<K>{inst.transposed ? "1" : "0"});
    } else if (opt.kind == "curve") {
        const CurveInstance<K> inst = gen_curve_instance<K>(opt.r, opt.g, opt.degree, opt.seed);
        result.objects.emplace_back("L", inst.rep);
        const ParamCurve<K> curve = inst.curve();
        result.objects.emplace_back("C", curve);
    } else {
        throw ParseError("gen kind must be frobenius or curve");
    }
    result.objects.emplace_back("seed", TagObject<K>{std::to_string(opt.seed)});

    const std::string text = serialize_instance(result);
    if (opt.out_path.empty())
        out << text;
    else
        write_file(opt.out_path, text);
    return 0;
}

template <class K>
Instance<K> load(const std::string& path) {
    return parse_instance<K>(read_file(path));
}

/// Parses the first file's header, activates the field, and runs the
/// handler instantiated for the right coefficient type.
template <class FnRat, class FnFp>
int dispatch_field(const std::string& first_file, FnRat&& frat, FnFp&& ffp) {
    const FileHeader h = parse_header_text(read_file(first_file));
    activate_field(h);
    if (h.field == FieldTag::Prime) return ffp();
    return frat();
}

} // namespace

int command_dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for determinantal representations of hypersurfaces"};
    app.require_subcommand(1);
    Options opt;

    auto* det = app.add_subcommand("det", "determinant hypersurface of a matrix of linear forms");
    det->add_option("file", opt.file_a, "instance file with a linform-matrix")->required();
    det->add_option("--out", opt.out_path, "write the determinant as a canonical file");

    auto* tc = app.add_subcommand("tangent-cone", "multiplicity and leading form at a point");
    tc->add_option("file", opt.file_a, "instance file with a multipoly (and optional points)")
        ->required();
    tc->add_option("--out", opt.out_path);

    auto* cg = app.add_subcommand("check-generic", "entry independence and minor genericity probe");
    cg->add_option("file", opt.file_a)->required();
    cg->add_option("--trials", opt.trials);
    cg->add_option("--seed", opt.seed);

    auto* fr = app.add_subcommand("frobenius", "decompose A = S*B*T or S*B^t*T");
    fr->add_option("fileA", opt.file_a)->required();
    fr->add_option("fileB", opt.file_b)->required();
    fr->add_option("--out", opt.out_path, "write the certificate");

    auto* ve = app.add_subcommand("verify", "check a certificate against A and B");
    ve->add_option("fileA", opt.file_a)->required();
    ve->add_option("fileB", opt.file_b)->required();
    ve->add_option("cert", opt.file_cert)->required();

    auto* re = app.add_subcommand("restrict", "restrict a matrix of forms to a curve");
    re->add_option("file", opt.file_a, "instance file with a linform-matrix and a curve")
        ->required();
    re->add_option("--out", opt.out_path);

    auto* rp = app.add_subcommand("rank-profile", "generic rank and drop locus along a curve");
    rp->add_option("file", opt.file_a)->required();

    auto* rc = app.add_subcommand("reconstruct", "candidate bundles from a representation");
    rc->add_option("file", opt.file_a)->required();
    rc->add_option("--reference", opt.reference, "reference representation for disambiguation");
    rc->add_option("--out", opt.out_path);

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("kind", opt.kind, "frobenius or curve")->required();
    gen->add_option("--r", opt.r);
    gen->add_option("--g", opt.g);
    gen->add_option("--degree", opt.degree);
    gen->add_flag("--transposed", opt.transposed);
    gen->add_option("--seed", opt.seed);
    gen->add_option("--field", opt.field_spec, "q or p:<prime>");
    gen->add_option("--out", opt.out_path);

    auto* st = app.add_subcommand("selftest", "run the property suite of every module");
    st->add_option("--seed", opt.seed);
    st->add_option("--trials", opt.trials);
    st->add_option("--field", opt.field_spec);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (det->parsed())
            return dispatch_field(
                opt.file_a, [&] { return cmd_det(load<Rat>(opt.file_a), opt, out); },
                [&] { return cmd_det(load<Fp>(opt.file_a), opt, out); });
        if (tc->parsed())
            return dispatch_field(
                opt.file_a, [&] { return cmd_tangent_cone(load<Rat>(opt.file_a), opt, out); },
                [&] { return cmd_tangent_cone(load<Fp>(opt.file_a), opt, out); });
        if (cg->parsed())
            return dispatch_field(
                opt.file_a, [&] { return cmd_check_generic(load<Rat>(opt.file_a), opt, out); },
                [&] { return cmd_check_generic(load<Fp>(opt.file_a), opt, out); });
        if (fr->parsed())
            return dispatch_field(
                opt.file_a,
                [&] { return cmd_frobenius(load<Rat>(opt.file_a), load<Rat>(opt.file_b), opt, out); },
                [&] { return cmd_frobenius(load<Fp>(opt.file_a), load<Fp>(opt.file_b), opt, out); });
        if (ve->parsed())
            return dispatch_field(
                opt.file_a,
                [&] {
                    return cmd_verify(load<Rat>(opt.file_a), load<Rat>(opt.file_b),
                                      load<Rat>(opt.file_cert), out);
                },
                [&] {
                    return cmd_verify(load<Fp>(opt.file_a), load<Fp>(opt.file_b),
                                      load<Fp>(opt.file_cert), out);
                });
        if (re->parsed())
            return dispatch_field(
                opt.file_a, [&] { return cmd_restrict(load<Rat>(opt.file_a), opt, out); },
                [&] { return cmd_restrict(load<Fp>(opt.file_a), opt, out); });
        if (rp->parsed())
            return dispatch_field(
                opt.file_a, [&] { return cmd_rank_profile(load<Rat>(opt.file_a), out); },
                [&] { return cmd_rank_profile(load<Fp>(opt.file_a), out); });
        if (rc->parsed())
            return dispatch_field(
                opt.file_a, [&] { return cmd_reconstruct(load<Rat>(opt.file_a), opt, out); },
                [&] { return cmd_reconstruct(load<Fp>(opt.file_a), opt, out); });
        if (gen->parsed()) {
            const FieldSpec field = parse_field_spec(opt.field_spec);
            if (field.tag == FieldTag::Prime) {
                Fp::set_modulus(field.prime);
                return cmd_gen<Fp>(opt, field, out);
            }
            return cmd_gen<Rat>(opt, field, out);
        }
        if (st->parsed()) {
            const FieldSpec field = parse_field_spec(opt.field_spec);
            if (field.tag == FieldTag::Prime) Fp::set_modulus(field.prime);
            const bool ok = run_selftest(opt.seed, opt.trials, field.tag, field.prime, out);
            return ok ? 0 : 3;
        }
        err << "no subcommand selected\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BadDimensions& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "negative result: " << e.what() << "\n";
        return 1;
    }
}

} // namespace detrep
