#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fano10/json_io.hpp"

using namespace fano10;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInternal = 4;

std::string mat_text(const IntMat& m, const std::string& indent = "  ") {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
        os << "]\n";
    }
    return os.str();
}

std::optional<Lattice> builtin_lattice(const std::string& name) {
    if (name == "U") return lattice_U();
    if (name == "A1") return lattice_A1();
    if (name == "E8") return lattice_E8();
    if (name == "I22_2") return lattice_odd_unimodular(22, 2);
    if (name == "I20_2") return lattice_odd_unimodular(20, 2);
    if (name == "Lambda2") {
        const AmbientModel& m = ambient_model();
        return Lattice(induced_lattice(m.lambda2).gram(), "Lambda2");
    }
    if (name == "Lambda") {
        const AmbientModel& m = ambient_model();
        return Lattice(induced_lattice(m.lambda).gram(), "Lambda");
    }
    return std::nullopt;
}

/// Accepts a builtin name, an inline JSON matrix, or a path to a file holding
/// one.
Lattice lattice_from_arg(const std::string& arg) {
    if (auto l = builtin_lattice(arg)) return *l;
    std::string text = arg;
    if (arg.find('[') == std::string::npos) {
        std::ifstream in(arg);
        if (!in) throw ParseError("not a builtin lattice, matrix, or readable file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    IntMat g = mat_from_string(text);
    if (g.rows() != g.cols()) throw ParseError("Gram matrix must be square");
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (g(i, j) != g(j, i)) throw ParseError("Gram matrix must be symmetric");
    return Lattice(std::move(g));
}

std::string signature_text(const Lattice& l) {
    auto [p, q] = l.signature();
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string lattice_info_text(const Lattice& l) {
    std::ostringstream os;
    if (!l.label().empty()) os << "lattice: " << l.label() << "\n";
    os << "rank: " << l.rank() << "\n";
    os << "signature: " << signature_text(l) << "\n";
    os << "parity: " << (l.is_even() ? "even" : "odd") << "\n";
    os << "determinant: " << l.determinant().get_str() << "\n";
    DiscriminantGroup d(l);
    os << "invariant_factors:";
    if (d.ngens() == 0) os << " (trivial)";
    for (const Int& f : d.invariant_factors()) os << " " << f.get_str();
    os << "\n";
    const int k = d.ngens();
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            std::vector<Int> gi(k), gj(k);
            gi[i] = 1;
            gj[j] = 1;
            os << "b(g" << i + 1 << ",g" << j + 1 << ") = " << rat_to_string(d.b(gi, gj)) << "\n";
        }
    if (l.is_even())
        for (int i = 0; i < k; ++i) {
            std::vector<Int> gi(k);
            gi[i] = 1;
            os << "q(g" << i + 1 << ") = " << rat_to_string(d.q(gi)) << "\n";
        }
    return os.str();
}

std::string classify_text(const Int& d) {
    auto ks = classify_special_sublattice(d);
    std::ostringstream os;
    os << "d = " << d.get_str() << "\n";
    os << "orbits: " << ks.size() << "\n";
    for (size_t i = 0; i < ks.size(); ++i) {
        os << "orbit " << i + 1 << ": " << divisor_label_string(ks[i].label, ks[i].d) << "\n";
        os << mat_text(ks[i].gram);
    }
    return os.str();
}

std::string assoc_text(const Int& d) {
    const AssociationVerdict k3 = k3_association_verdict(d);
    const AssociationVerdict cubic = cubic_association_verdict(d);
    std::ostringstream os;
    os << "d = " << d.get_str() << "\n";
    os << "k3: " << yesno(has_associated_k3(d)) << " (criterion: " << yesno(k3.by_criterion)
       << ", oracle: " << yesno(k3.by_oracle) << ")\n";
    os << "cubic: " << yesno(has_associated_cubic(d)) << " (criterion: "
       << yesno(cubic.by_criterion) << ", oracle: " << yesno(cubic.by_oracle) << ")\n";
    return os.str();
}

std::string sweep_text(const Int& d_max) {
    std::ostringstream os;
    os << "d  orbits  labels  k3  cubic\n";
    for (Int d = 2; d <= d_max; ++d) {
        if (!admissible_discriminant(d)) continue;
        auto ks = classify_special_sublattice(d);
        os << d.get_str() << "  " << ks.size() << "  ";
        for (size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << label_name(ks[i].label);
        os << "  " << yesno(has_associated_k3(d)) << "  " << yesno(has_associated_cubic(d))
           << "\n";
    }
    return os.str();
}

std::string examples_text() {
    std::ostringstream os;
    for (const auto& r : example_family_table()) {
        os << r.family << ": self-intersection " << r.self_intersection.get_str() << ", d = "
           << r.d.get_str() << ", " << divisor_label_string(r.label, r.d) << "\n";
        os << mat_text(r.gram);
    }
    return os.str();
}

std::string th81_text(long e_max) {
    std::ostringstream os;
    for (const auto& r : th81_targets(e_max)) {
        os << "e = " << r.e << ": d = " << r.d.get_str() << ", "
           << divisor_label_string(r.label, r.d) << "\n";
        os << mat_text(r.gram);
    }
    return os.str();
}

void emit(const std::string& text, const json& j, const std::string& format,
          const std::string& out_file) {
    std::string payload = format == "json" ? j.dump(2) + "\n" : text;
    if (out_file.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_file);
        if (!out) throw ParseError("cannot open output file: " + out_file);
        out << payload;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice arithmetic for degree-10 index-2 prime Fano fourfolds"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_file;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_file, "Write output to FILE instead of stdout");

    std::string gram_arg;
    auto* info = app.add_subcommand("lattice-info",
                                    "Invariants and discriminant form of a lattice");
    info->add_option("gram", gram_arg,
                     "Builtin name (U, A1, E8, Lambda, Lambda2, I22_2, I20_2), "
                     "inline JSON matrix, or file path")
        ->required();

    long d_arg = 0;
    auto* classify = app.add_subcommand("classify", "Orbit representatives for discriminant d");
    classify->add_option("d", d_arg, "Discriminant")->required();

    long assoc_d = 0;
    auto* assoc = app.add_subcommand("assoc", "K3 / cubic association for discriminant d");
    assoc->add_option("d", assoc_d, "Discriminant")->required();

    long d_max = 0;
    auto* sweep = app.add_subcommand("sweep", "Classification and association table up to d_max");
    sweep->add_option("d_max", d_max, "Largest discriminant")->required();

    auto* examples = app.add_subcommand("examples", "The six worked example families");

    long e_max = 0;
    auto* th81 = app.add_subcommand("th81", "Target Gram table for 0 <= e <= e_max");
    th81->add_option("e_max", e_max, "Largest family parameter")->required();

    // Let --format / --out appear after the subcommand as well.
    for (auto* sub : {info, classify, assoc, sweep, examples, th81}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (info->parsed()) {
            Lattice l = lattice_from_arg(gram_arg);
            if (l.determinant() == 0) throw Degenerate("degenerate Gram matrix");
            emit(lattice_info_text(l), lattice_report(l), format, out_file);
        } else if (classify->parsed()) {
            emit(classify_text(d_arg), classify_to_json(d_arg), format, out_file);
        } else if (assoc->parsed()) {
            emit(assoc_text(assoc_d), assoc_to_json(assoc_d), format, out_file);
        } else if (sweep->parsed()) {
            emit(sweep_text(d_max), sweep_to_json(d_max), format, out_file);
        } else if (examples->parsed()) {
            emit(examples_text(), examples_to_json(), format, out_file);
        } else if (th81->parsed()) {
            emit(th81_text(e_max), th81_to_json(e_max), format, out_file);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
