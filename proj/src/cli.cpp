#include "xmod/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "xmod/braided.hpp"
#include "xmod/io.hpp"

namespace xmod::cli {

namespace {

void print_document_line(std::ostream& out, const XmodDocument& doc) {
    out << "document: " << (doc.name.empty() ? "(unnamed)" : doc.name) << "\n";
    out << "objects: " << doc.xmod.object_count()
        << ", arrows: " << doc.xmod.groupoid().arrow_count()
        << ", elements: " << doc.xmod.bundle().element_count() << "\n";
}

void print_report(std::ostream& out, const std::string& label, const ValidationReport& r) {
    out << label << ": " << (r.ok() ? "ok\n" : "\n");
    if (!r.ok()) {
        std::istringstream lines(r.summary());
        std::string line;
        while (std::getline(lines, line)) out << "  " << line << "\n";
    }
}

std::string render_fder(const XmodDocument& doc, const FreeDerivation& s) {
    std::ostringstream os;
    os << "s0 = (";
    for (size_t x = 0; x < s.s0.size(); ++x)
        os << (x ? " " : "") << doc.arrow_names[s.s0[x]];
    os << ") s1 = (";
    for (size_t a = 0; a < s.s1.size(); ++a)
        os << (a ? " " : "") << element_display_name(doc, s.s1[a]);
    os << ")";
    return os.str();
}

void print_cayley(std::ostream& out, const std::vector<std::vector<int>>& table) {
    for (const auto& row : table) {
        for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << "\n";
    }
}

int cmd_check(const XmodDocument& doc, std::ostream& out) {
    out << "xmod check\n";
    print_document_line(out, doc);
    const XmodCheck check = validate_crossed_module(doc.xmod);
    print_report(out, "axioms", check.report);
    out << "verdict: " << to_string(check.verdict) << "\n";
    return check.verdict == XmodVerdict::crossed ? 0 : 1;
}

int require_crossed(const XmodDocument& doc, std::ostream& out) {
    const XmodCheck check = validate_crossed_module(doc.xmod);
    if (check.verdict != XmodVerdict::crossed) {
        print_report(out, "axioms", check.report);
        out << "verdict: " << to_string(check.verdict) << "\n";
        return 1;
    }
    return 0;
}

int cmd_fder(const XmodDocument& doc, bool invertible, bool table, std::ostream& out) {
    out << "xmod fder\n";
    print_document_line(out, doc);
    if (const int rc = require_crossed(doc, out)) return rc;

    if (invertible) {
        const FDerStarGroup star = enumerate_fder_star(doc.xmod);
        out << "|FDer*| = " << star.group.order() << "\n";
        for (size_t i = 0; i < star.elements.size(); ++i)
            out << "s[" << i << "]: " << render_fder(doc, star.elements[i]) << "\n";
        if (table) {
            out << "table:\n";
            print_cayley(out, star.group.table());
        }
    } else {
        const std::vector<FreeDerivation> all = enumerate_fder(doc.xmod);
        out << "|FDer| = " << all.size() << "\n";
        for (size_t i = 0; i < all.size(); ++i)
            out << "s[" << i << "]: " << render_fder(doc, all[i]) << "\n";
        if (table) {
            out << "table:\n";
            std::vector<std::vector<int>> t(all.size(), std::vector<int>(all.size(), -1));
            for (size_t i = 0; i < all.size(); ++i)
                for (size_t j = 0; j < all.size(); ++j) {
                    const FreeDerivation p = fder_multiply(doc.xmod, all[i], all[j]);
                    for (size_t k = 0; k < all.size(); ++k)
                        if (all[k] == p) t[i][j] = static_cast<int>(k);
                }
            print_cayley(out, t);
        }
    }
    return 0;
}

int cmd_aut(const XmodDocument& doc, std::ostream& out) {
    out << "xmod aut\n";
    print_document_line(out, doc);
    if (const int rc = require_crossed(doc, out)) return rc;

    const XmodAutGroup aut = enumerate_xmod_automorphisms(doc.xmod);
    out << "|Aut| = " << aut.group.order() << "\n";
    for (size_t i = 0; i < aut.elements.size(); ++i) {
        const XmodMorphism& f = aut.elements[i];
        out << "f[" << i << "]: objects (";
        for (size_t x = 0; x < f.obj_map.size(); ++x)
            out << (x ? " " : "") << doc.object_names[f.obj_map[x]];
        out << ") arrows (";
        for (size_t a = 0; a < f.arr_map.size(); ++a)
            out << (a ? " " : "") << doc.arrow_names[f.arr_map[a]];
        out << ") elements (";
        for (size_t c = 0; c < f.bun_map.size(); ++c)
            out << (c ? " " : "") << element_display_name(doc, f.bun_map[c]);
        out << ")\n";
    }
    out << "table:\n";
    print_cayley(out, aut.group.table());
    return 0;
}

int cmd_actor(const XmodDocument& doc, const std::string& emit_path, std::ostream& out,
              std::ostream& err) {
    out << "xmod actor\n";
    print_document_line(out, doc);
    if (const int rc = require_crossed(doc, out)) return rc;

    const ActorTwoCrossed actor = build_actor_2crossed(doc.xmod);
    out << "|M2| = " << actor.tcm.l.order() << ", |FDer*| = " << actor.tcm.m.order()
        << ", |Aut| = " << actor.tcm.p.order() << "\n";
    const ValidationReport report = validate_2crossed(actor.tcm);
    print_report(out, "2-crossed axioms (P1..P6 and structure)", report);

    if (!emit_path.empty()) {
        std::ofstream file(emit_path, std::ios::binary);
        if (!file) {
            err << "cannot write " << emit_path << "\n";
            return 2;
        }
        file << serialize_two_crossed(actor.tcm);
        out << "emitted: " << emit_path << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_braided(const XmodDocument& doc, std::ostream& out) {
    out << "xmod braided\n";
    print_document_line(out, doc);
    if (const int rc = require_crossed(doc, out)) return rc;

    const AutBraided ab = build_aut_braided(doc.xmod);
    out << "|A0| = " << ab.aut.group.order() << ", |A1| = " << ab.arrows.size()
        << ", |A2| = " << ab.elements.size() << "\n";
    const BraidedCheck check = validate_braided(ab.braided);
    print_report(out, "braided axioms 3.1..3.11", check.report);
    out << "regular: " << (check.regular ? "yes" : "no") << "\n";
    return check.report.ok() && check.regular ? 0 : 1;
}

int cmd_roundtrip(const XmodDocument& doc, std::ostream& out) {
    out << "xmod roundtrip\n";
    print_document_line(out, doc);
    if (const int rc = require_crossed(doc, out)) return rc;

    const ActorTwoCrossed actor = build_actor_2crossed(doc.xmod);
    out << "actor complex: " << actor.tcm.l.order() << " -> " << actor.tcm.m.order() << " -> "
        << actor.tcm.p.order() << "\n";
    const IsomorphismWitness w = roundtrip_check(actor.tcm);
    out << "witness L:";
    for (int v : w.l_map) out << " " << v;
    out << "\nwitness M:";
    for (int v : w.m_map) out << " " << v;
    out << "\nwitness P:";
    for (int v : w.p_map) out << " " << v;
    out << "\n";
    const ValidationReport ident = compare_actor_braided(doc.xmod);
    print_report(out, "costar identification with AUT braiding", ident);
    return ident.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite crossed modules of groupoids: derivations, actors, braidings"};
    app.require_subcommand(1);

    std::string file;
    bool invertible = false;
    bool table = false;
    std::string emit_path;

    CLI::App* check = app.add_subcommand("check", "validate a crossed module file");
    check->add_option("file", file)->required();
    CLI::App* fder = app.add_subcommand("fder", "list free derivations");
    fder->add_option("file", file)->required();
    fder->add_flag("--invertible", invertible, "restrict to FDer*");
    fder->add_flag("--table", table, "print the * Cayley table");
    CLI::App* aut = app.add_subcommand("aut", "enumerate automorphisms");
    aut->add_option("file", file)->required();
    CLI::App* actor = app.add_subcommand("actor", "build and validate the actor 2-crossed module");
    actor->add_option("file", file)->required();
    actor->add_option("--emit", emit_path, "write the machine-readable 2-crossed document");
    CLI::App* braided = app.add_subcommand("braided", "build and validate the AUT braiding");
    braided->add_option("file", file)->required();
    CLI::App* roundtrip = app.add_subcommand("roundtrip", "equivalence roundtrip with witness");
    roundtrip->add_option("file", file)->required();

    try {
        std::vector<const char*> argv;
        argv.push_back("xmod");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        const XmodDocument doc = load_xmod_file(file);
        if (check->parsed()) return cmd_check(doc, out);
        if (fder->parsed()) return cmd_fder(doc, invertible, table, out);
        if (aut->parsed()) return cmd_aut(doc, out);
        if (actor->parsed()) return cmd_actor(doc, emit_path, out, err);
        if (braided->parsed()) return cmd_braided(doc, out);
        if (roundtrip->parsed()) return cmd_roundtrip(doc, out);
        err << "no command\n";
        return 2;
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::syntax_error:
            case ErrorKind::semantic_error:
                err << e.what() << "\n";
                return 2;
            case ErrorKind::budget_exceeded:
                err << e.what() << "\n";
                return 3;
            default:
                err << e.what() << "\n";
                return 1;
        }
    }
}

}  // namespace xmod::cli
