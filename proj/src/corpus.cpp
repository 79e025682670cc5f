#include "fimod/corpus.hpp"

#include "fimod/errors.hpp"

namespace fimod {

TruncatedFIModule atomic_module(const ModObj& v0, int n) {
    const CoeffCategory& c = v0.coeff;
    std::vector<ModObj> levels{v0};
    for (int k = 1; k <= n; ++k)
        levels.push_back(ModObj::zero(c));
    std::vector<ModMap> incl;
    for (int k = 0; k < n; ++k)
        incl.push_back(ModMap::zero(levels[k], levels[k + 1]));
    std::vector<std::vector<ModMap>> transp(n + 1);
    for (int k = 2; k <= n; ++k)
        transp[k].assign(k - 1, ModMap::zero(levels[k], levels[k]));
    return make_fi_module(c, n, std::move(levels), std::move(incl), std::move(transp));
}

TruncatedFIModule constant_module(const ModObj& level, int n) {
    std::vector<ModObj> levels(n + 1, level);
    std::vector<ModMap> incl(n, ModMap::identity(level));
    std::vector<std::vector<ModMap>> transp(n + 1);
    for (int k = 2; k <= n; ++k)
        transp[k].assign(k - 1, ModMap::identity(level));
    return make_fi_module(level.coeff, n, std::move(levels), std::move(incl), std::move(transp));
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> list;
        auto f2 = CoeffCategory::prime_field(2);
        auto f3 = CoeffCategory::prime_field(3);
        auto q = CoeffCategory::rationals();
        auto z = CoeffCategory::integers();
        auto disc = CoeffCategory::discrete(2, {"r1", "r2"});

        auto add_free = [&](const CoeffCategory& c, const char* tag, long d, int n) {
            list.push_back({"free-" + std::to_string(d) + "-" + tag,
                            "free module on one degree-" + std::to_string(d) +
                                " generator over " + c.describe(),
                            free_module(c, d, 0, n)});
        };
        for (long d = 0; d <= 2; ++d)
            add_free(f2, "f2", d, 5);
        add_free(f2, "f2", 3, 4);
        add_free(f3, "f3", 1, 5);
        add_free(f3, "f3", 2, 5);
        add_free(q, "q", 1, 5);
        add_free(q, "q", 2, 5);
        add_free(z, "z", 0, 4);
        add_free(z, "z", 1, 4);
        add_free(z, "z", 2, 4);

        list.push_back({"atomic-0-z", "one copy of Z at level 0, zero above",
                        atomic_module(ModObj::z_module({}, 1), 5)});
        list.push_back({"atomic-0-f2", "one-dimensional level 0 over F2, zero above",
                        atomic_module(ModObj::field_dims(f2, {1}), 5)});
        list.push_back({"mixed-z", "constant tower Z + Z/2 with identity maps",
                        constant_module(ModObj::z_module({2}, 1), 5)});
        list.push_back({"cyclic4-z", "constant tower Z/4 with identity maps",
                        constant_module(ModObj::z_module({4}, 0), 5)});
        list.push_back({"disc-mixed-f2",
                        "free on a degree-0 generator at r1 plus a degree-1 generator at r2 "
                        "over the two-object discrete category",
                        direct_sum_fi(disc, 4,
                                      {free_module(disc, 0, 0, 4), free_module(disc, 1, 1, 4)})
                            .obj});
        return list;
    }();
    return entries;
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (const auto& e : corpus())
        names.push_back(e.name);
    return names;
}

const CorpusEntry& corpus_entry(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name)
            return e;
    throw ValidationError("no corpus entry named '" + name + "'");
}

} // namespace fimod
