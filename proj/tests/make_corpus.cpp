// Regenerates the corpus files that come from structured instances (the
// positive catalog and the structurally-negative ones). The textual
// negative files (syntax errors, dangling ids, missing entries) are
// maintained by hand.
//
// Usage: make_corpus <output-dir>

#include <fstream>
#include <iostream>

#include "instances.hpp"

namespace {

void write(const std::string& dir, const std::string& name, const xmod::XmodDocument& doc) {
    const std::string path = dir + "/" + name + ".xmod";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        std::exit(1);
    }
    out << xmod::serialize_xmod(doc);
    std::cout << path << "\n";
}

// CM1 holds, CM2 fails: a nonabelian kernel with zero boundary
xmod::CrossedModule precrossed_only() {
    xmod::CrossedModule x;
    x.action.bundle = xmod::GroupBundle::from_fibres({xmod::FiniteGroup::symmetric(3)});
    x.action.g = xmod::FiniteGroupoid::from_group(xmod::FiniteGroup::trivial());
    x.action.act = {{0}, {1}, {2}, {3}, {4}, {5}};
    x.delta.assign(6, 0);
    return x;
}

// action additivity broken on one pair
xmod::CrossedModule broken_action() {
    xmod::CrossedModule x = testinst::make_c2c2();
    x.action.act[0][1] = 1;
    return x;
}

// composition entry outside the composable domain
xmod::CrossedModule bad_comp_domain() {
    xmod::CrossedModule x = testinst::make_indiscrete2();
    xmod::FiniteGroupoid g = x.action.g;
    // append a discrete third object so a stray entry is possible without
    // breaking totality elsewhere
    (void)g;
    xmod::CrossedModule y;
    std::vector<int> src{0, 1}, tgt{0, 1};
    std::vector<std::vector<int>> comp{{0, -1}, {-1, 1}};
    comp[0][1] = 0;  // tgt(a0) != src(a1)
    y.action.g = xmod::FiniteGroupoid::from_tables(2, src, tgt, comp);
    y.action.bundle = xmod::GroupBundle::from_fibres(
        {xmod::FiniteGroup::trivial(), xmod::FiniteGroup::trivial()});
    y.action.act = {{0, -1}, {-1, 1}};
    y.delta = {0, 1};
    return y;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : testinst::corpus_dir();
    for (const auto& inst : testinst::catalog())
        write(dir, inst.name, testinst::to_document(inst));

    write(dir, "neg_precrossed", testinst::to_document({"neg_precrossed", precrossed_only()}));
    write(dir, "neg_action_break",
          testinst::to_document({"neg_action_break", broken_action()}));
    write(dir, "neg_bad_comp_domain",
          testinst::to_document({"neg_bad_comp_domain", bad_comp_domain()}));
    return 0;
}
