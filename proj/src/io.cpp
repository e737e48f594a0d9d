#include "xmod/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace xmod {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
              c == '+' || c == '.' || c == '*'))
            return false;
    }
    return true;
}

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t end = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        ++number;
        const size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream is{std::string(raw)};
        std::vector<std::string> tokens;
        std::string tok;
        while (is >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back(Line{number, std::move(tokens)});
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return lines;
}

[[noreturn]] void syntax(int line, const std::string& what) {
    throw Error(ErrorKind::syntax_error, "line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void semantic(int line, const std::string& what) {
    throw Error(ErrorKind::semantic_error, "line " + std::to_string(line) + ": " + what);
}

bool is_header(const std::string& tok) {
    return tok == "OBJECTS" || tok == "ARROWS" || tok == "COMP" || tok == "GROUPS" ||
           tok == "DELTA" || tok == "ACTION";
}

}  // namespace

XmodDocument parse_xmod(std::string_view text) {
    const std::vector<Line> lines = tokenize(text);
    size_t i = 0;
    const auto have = [&]() { return i < lines.size(); };
    const auto expect_header = [&](const std::string& name) {
        if (!have()) syntax(lines.empty() ? 1 : lines.back().number, "missing section " + name);
        if (lines[i].tokens.size() != 1 || lines[i].tokens[0] != name)
            syntax(lines[i].number, "expected section header " + name);
        ++i;
    };

    if (!have()) syntax(1, "empty document");
    if (lines[i].tokens.size() != 2 || lines[i].tokens[0] != "version")
        syntax(lines[i].number, "expected `version 1`");
    if (lines[i].tokens[1] != "1")
        syntax(lines[i].number, "unsupported version " + lines[i].tokens[1]);
    ++i;

    XmodDocument doc;
    if (have() && lines[i].tokens[0] == "name") {
        if (lines[i].tokens.size() != 2 || !valid_name(lines[i].tokens[1]))
            syntax(lines[i].number, "expected `name <identifier>`");
        doc.name = lines[i].tokens[1];
        ++i;
    }

    // OBJECTS
    expect_header("OBJECTS");
    std::map<std::string, int> object_id;
    while (have() && !is_header(lines[i].tokens[0])) {
        for (const std::string& tok : lines[i].tokens) {
            if (!valid_name(tok)) syntax(lines[i].number, "bad object name `" + tok + "`");
            if (object_id.count(tok)) semantic(lines[i].number, "duplicate object `" + tok + "`");
            object_id[tok] = static_cast<int>(doc.object_names.size());
            doc.object_names.push_back(tok);
        }
        ++i;
    }
    if (doc.object_names.empty())
        semantic(have() ? lines[i].number : 1, "empty object set is not allowed");
    const int n_obj = static_cast<int>(doc.object_names.size());
    const auto object_ref = [&](const std::string& tok, int line) {
        const auto it = object_id.find(tok);
        if (it == object_id.end()) semantic(line, "unknown object `" + tok + "`");
        return it->second;
    };

    // ARROWS: name : src -> tgt
    expect_header("ARROWS");
    std::map<std::string, int> arrow_id;
    std::vector<int> src, tgt;
    while (have() && !is_header(lines[i].tokens[0])) {
        const auto& t = lines[i].tokens;
        if (t.size() != 5 || t[1] != ":" || t[3] != "->")
            syntax(lines[i].number, "expected `arrow : src -> tgt`");
        if (!valid_name(t[0])) syntax(lines[i].number, "bad arrow name `" + t[0] + "`");
        if (arrow_id.count(t[0])) semantic(lines[i].number, "duplicate arrow `" + t[0] + "`");
        arrow_id[t[0]] = static_cast<int>(doc.arrow_names.size());
        doc.arrow_names.push_back(t[0]);
        src.push_back(object_ref(t[2], lines[i].number));
        tgt.push_back(object_ref(t[4], lines[i].number));
        ++i;
    }
    const int n_arr = static_cast<int>(doc.arrow_names.size());
    const auto arrow_ref = [&](const std::string& tok, int line) {
        const auto it = arrow_id.find(tok);
        if (it == arrow_id.end()) semantic(line, "unknown arrow `" + tok + "`");
        return it->second;
    };

    // COMP: a b = c
    expect_header("COMP");
    std::vector<std::vector<int>> comp(n_arr, std::vector<int>(n_arr, -1));
    while (have() && !is_header(lines[i].tokens[0])) {
        const auto& t = lines[i].tokens;
        if (t.size() != 4 || t[2] != "=") syntax(lines[i].number, "expected `a b = c`");
        const int a = arrow_ref(t[0], lines[i].number);
        const int b = arrow_ref(t[1], lines[i].number);
        const int c = arrow_ref(t[3], lines[i].number);
        if (comp[a][b] >= 0)
            semantic(lines[i].number, "duplicate composition `" + t[0] + " " + t[1] + "`");
        comp[a][b] = c;
        ++i;
    }
    for (int a = 0; a < n_arr; ++a)
        for (int b = 0; b < n_arr; ++b)
            if (tgt[a] == src[b] && comp[a][b] < 0)
                semantic(have() ? lines[i].number : 1,
                         "composition table not total: missing `" + doc.arrow_names[a] + " " +
                             doc.arrow_names[b] + "`");

    // GROUPS: `group x : e0 e1 ...` and `add x : a b = c`
    expect_header("GROUPS");
    std::vector<std::vector<std::string>> fibre_names(n_obj);
    std::vector<std::map<std::string, int>> fibre_local(n_obj);
    std::vector<bool> has_group(n_obj, false);
    struct AddEntry {
        int obj, a, b, c, line;
    };
    std::vector<AddEntry> add_entries;
    while (have() && !is_header(lines[i].tokens[0])) {
        const auto& t = lines[i].tokens;
        if (t[0] == "group") {
            if (t.size() < 4 || t[2] != ":")
                syntax(lines[i].number, "expected `group x : e0 e1 ...`");
            const int obj = object_ref(t[1], lines[i].number);
            if (has_group[obj])
                semantic(lines[i].number, "duplicate group for object `" + t[1] + "`");
            has_group[obj] = true;
            for (size_t k = 3; k < t.size(); ++k) {
                if (!valid_name(t[k])) syntax(lines[i].number, "bad element name `" + t[k] + "`");
                if (fibre_local[obj].count(t[k]))
                    semantic(lines[i].number, "duplicate element `" + t[k] + "`");
                fibre_local[obj][t[k]] = static_cast<int>(fibre_names[obj].size());
                fibre_names[obj].push_back(t[k]);
            }
        } else if (t[0] == "add") {
            if (t.size() != 7 || t[2] != ":" || t[5] != "=")
                syntax(lines[i].number, "expected `add x : a b = c`");
            const int obj = object_ref(t[1], lines[i].number);
            if (!has_group[obj])
                semantic(lines[i].number, "add before group for object `" + t[1] + "`");
            const auto local = [&](const std::string& tok) {
                const auto it = fibre_local[obj].find(tok);
                if (it == fibre_local[obj].end())
                    semantic(lines[i].number, "unknown element `" + tok + "`");
                return it->second;
            };
            add_entries.push_back(AddEntry{obj, local(t[3]), local(t[4]), local(t[6]),
                                           lines[i].number});
        } else {
            syntax(lines[i].number, "expected `group` or `add` line");
        }
        ++i;
    }
    for (int x = 0; x < n_obj; ++x) {
        if (!has_group[x])
            semantic(have() ? lines[i].number : 1,
                     "object `" + doc.object_names[x] + "` has no group");
        if (fibre_names[x].empty())
            semantic(have() ? lines[i].number : 1,
                     "group over `" + doc.object_names[x] + "` has no elements");
    }

    // global element ids, fibre by fibre
    std::vector<int> offset(n_obj + 1, 0);
    for (int x = 0; x < n_obj; ++x)
        offset[x + 1] = offset[x] + static_cast<int>(fibre_names[x].size());
    const int n_elem = offset[n_obj];
    std::vector<int> base(n_elem);
    for (int x = 0; x < n_obj; ++x)
        for (size_t k = 0; k < fibre_names[x].size(); ++k) {
            base[offset[x] + static_cast<int>(k)] = x;
            doc.element_names.push_back(fibre_names[x][k]);
        }

    std::vector<std::vector<int>> add(n_elem, std::vector<int>(n_elem, -1));
    for (const AddEntry& e : add_entries) {
        const int ga = offset[e.obj] + e.a;
        const int gb = offset[e.obj] + e.b;
        if (add[ga][gb] >= 0) semantic(e.line, "duplicate add entry");
        add[ga][gb] = offset[e.obj] + e.c;
    }
    for (int c = 0; c < n_elem; ++c)
        for (int d = 0; d < n_elem; ++d)
            if (base[c] == base[d] && add[c][d] < 0)
                semantic(have() ? lines[i].number : 1,
                         "group table not total over `" + doc.object_names[base[c]] + "`");

    const auto element_ref = [&](const std::string& tok, int line) {
        const size_t colon = tok.find(':');
        if (colon == std::string::npos)
            syntax(line, "expected namespaced element `object:element`, got `" + tok + "`");
        const std::string obj_part = tok.substr(0, colon);
        const std::string elem_part = tok.substr(colon + 1);
        const int obj = object_ref(obj_part, line);
        const auto it = fibre_local[obj].find(elem_part);
        if (it == fibre_local[obj].end()) semantic(line, "unknown element `" + tok + "`");
        return offset[obj] + it->second;
    };

    // DELTA: x:c = arrow
    expect_header("DELTA");
    std::vector<int> delta(n_elem, -1);
    while (have() && !is_header(lines[i].tokens[0])) {
        const auto& t = lines[i].tokens;
        if (t.size() != 3 || t[1] != "=") syntax(lines[i].number, "expected `x:c = arrow`");
        const int c = element_ref(t[0], lines[i].number);
        if (delta[c] >= 0) semantic(lines[i].number, "duplicate delta entry for `" + t[0] + "`");
        delta[c] = arrow_ref(t[2], lines[i].number);
        ++i;
    }
    for (int c = 0; c < n_elem; ++c)
        if (delta[c] < 0)
            semantic(have() ? lines[i].number : 1, "delta table not total");

    // ACTION: x:c ^ arrow = y:d
    expect_header("ACTION");
    std::vector<std::vector<int>> act(n_elem, std::vector<int>(n_arr, -1));
    while (have()) {
        const auto& t = lines[i].tokens;
        if (t.size() != 5 || t[1] != "^" || t[3] != "=")
            syntax(lines[i].number, "expected `x:c ^ arrow = y:d`");
        const int c = element_ref(t[0], lines[i].number);
        const int a = arrow_ref(t[2], lines[i].number);
        const int d = element_ref(t[4], lines[i].number);
        if (act[c][a] >= 0) semantic(lines[i].number, "duplicate action entry");
        act[c][a] = d;
        ++i;
    }
    for (int c = 0; c < n_elem; ++c)
        for (int a = 0; a < n_arr; ++a)
            if (base[c] == src[a] && act[c][a] < 0)
                semantic(lines.empty() ? 1 : lines.back().number,
                         "action table not total: missing `" + doc.object_names[base[c]] + ":" +
                             doc.element_names[c] + " ^ " + doc.arrow_names[a] + "`");

    doc.xmod.action.g = FiniteGroupoid::from_tables(n_obj, src, tgt, comp);
    {
        FiniteGroupoid cgrpd = FiniteGroupoid::from_tables(n_obj, base, base, add);
        doc.xmod.action.bundle = GroupBundle::from_groupoid(cgrpd);
    }
    doc.xmod.action.act = std::move(act);
    doc.xmod.delta = std::move(delta);
    return doc;
}

std::string element_display_name(const XmodDocument& doc, int element) {
    if (element < 0 || element >= static_cast<int>(doc.element_names.size())) return "?";
    return doc.object_names[doc.xmod.bundle().base[element]] + ":" +
           doc.element_names[element];
}

std::string serialize_xmod(const XmodDocument& doc) {
    std::ostringstream os;
    const FiniteGroupoid& g = doc.xmod.groupoid();
    const GroupBundle& bun = doc.xmod.bundle();
    os << "version 1\n";
    if (!doc.name.empty()) os << "name " << doc.name << "\n";
    os << "OBJECTS\n";
    for (size_t x = 0; x < doc.object_names.size(); ++x)
        os << doc.object_names[x] << (x + 1 == doc.object_names.size() ? "\n" : " ");
    os << "ARROWS\n";
    for (int a = 0; a < g.arrow_count(); ++a)
        os << doc.arrow_names[a] << " : " << doc.object_names[g.src[a]] << " -> "
           << doc.object_names[g.tgt[a]] << "\n";
    os << "COMP\n";
    for (int a = 0; a < g.arrow_count(); ++a)
        for (int b = 0; b < g.arrow_count(); ++b)
            if (g.comp[a][b] >= 0)
                os << doc.arrow_names[a] << " " << doc.arrow_names[b] << " = "
                   << doc.arrow_names[g.comp[a][b]] << "\n";
    os << "GROUPS\n";
    for (int x = 0; x < g.object_count; ++x) {
        os << "group " << doc.object_names[x] << " :";
        for (int c : bun.fibre(x)) os << " " << doc.element_names[c];
        os << "\n";
    }
    for (int c = 0; c < bun.element_count(); ++c)
        for (int d = 0; d < bun.element_count(); ++d)
            if (bun.add[c][d] >= 0)
                os << "add " << doc.object_names[bun.base[c]] << " : " << doc.element_names[c]
                   << " " << doc.element_names[d] << " = " << doc.element_names[bun.add[c][d]]
                   << "\n";
    os << "DELTA\n";
    for (int c = 0; c < bun.element_count(); ++c)
        os << element_display_name(doc, c) << " = " << doc.arrow_names[doc.xmod.delta[c]]
           << "\n";
    os << "ACTION\n";
    for (int c = 0; c < bun.element_count(); ++c)
        for (int a = 0; a < g.arrow_count(); ++a)
            if (doc.xmod.action.act[c][a] >= 0)
                os << element_display_name(doc, c) << " ^ " << doc.arrow_names[a] << " = "
                   << element_display_name(doc, doc.xmod.action.act[c][a]) << "\n";
    return os.str();
}

std::string serialize_two_crossed(const TwoCrossedModule& t) {
    std::ostringstream os;
    const auto matrix = [&os](const std::string& header,
                              const std::vector<std::vector<int>>& rows) {
        os << header << "\n";
        for (const auto& row : rows) {
            for (size_t k = 0; k < row.size(); ++k) os << row[k] << (k + 1 == row.size() ? "" : " ");
            os << "\n";
        }
    };
    const auto vector_line = [&os](const std::string& header, const std::vector<int>& v) {
        os << header;
        for (int x : v) os << " " << x;
        os << "\n";
    };
    os << "version 1\n";
    os << "twocrossed\n";
    os << "L " << t.l.order() << "\n";
    os << "M " << t.m.order() << "\n";
    os << "P " << t.p.order() << "\n";
    matrix("LMUL", t.l.table());
    matrix("MMUL", t.m.table());
    matrix("PMUL", t.p.table());
    vector_line("D1", t.d1);
    vector_line("D2", t.d2);
    matrix("PONL", t.p_on_l);
    matrix("PONM", t.p_on_m);
    matrix("MONL", t.m_on_l);
    matrix("LIFT", t.lift);
    return os.str();
}

XmodDocument load_xmod_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::semantic_error, "cannot open file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_xmod(buf.str());
}

}  // namespace xmod
