#include "fimod/json_io.hpp"

#include "fimod/errors.hpp"

#include <fstream>

namespace fimod {

namespace {

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(format_scalar(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array())
        throw ValidationError("matrix must be a JSON array of rows");
    Mat m(rows, cols);
    if (j.size() != rows)
        throw ValidationError("matrix row count mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols)
            throw ValidationError("matrix column count mismatch");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = parse_scalar(j[i][k].get<std::string>());
    }
    return m;
}

} // namespace

Json coeff_to_json(const CoeffCategory& c) {
    Json j;
    switch (c.kind) {
    case CoeffCategory::Kind::PrimeField:
        j["kind"] = "prime_field";
        j["p"] = c.p;
        break;
    case CoeffCategory::Kind::Rationals: j["kind"] = "rationals"; break;
    case CoeffCategory::Kind::Integers: j["kind"] = "integers"; break;
    case CoeffCategory::Kind::Discrete:
        j["kind"] = "discrete";
        j["base_p"] = c.p;
        j["objects"] = c.objects;
        break;
    }
    return j;
}

CoeffCategory coeff_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "prime_field")
        return CoeffCategory::prime_field(j.at("p").get<long>());
    if (kind == "rationals")
        return CoeffCategory::rationals();
    if (kind == "integers")
        return CoeffCategory::integers();
    if (kind == "discrete")
        return CoeffCategory::discrete(j.at("base_p").get<long>(),
                                       j.at("objects").get<std::vector<std::string>>());
    throw ValidationError("unknown coefficient kind '" + kind + "'");
}

CoeffCategory parse_coeff_spec(const std::string& spec) {
    if (spec == "q")
        return CoeffCategory::rationals();
    if (spec == "z")
        return CoeffCategory::integers();
    if (!spec.empty() && spec[0] == 'f')
        return CoeffCategory::prime_field(std::stol(spec.substr(1)));
    if (spec.rfind("discrete:", 0) == 0) {
        std::string rest = spec.substr(9);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw ValidationError("discrete spec needs discrete:<field>:<objects>");
        std::string field = rest.substr(0, colon);
        long base_p = 0;
        if (field != "q") {
            if (field.empty() || field[0] != 'f')
                throw ValidationError("discrete base field must be q or f<p>");
            base_p = std::stol(field.substr(1));
        }
        std::vector<std::string> objects;
        std::string cur;
        for (char ch : rest.substr(colon + 1)) {
            if (ch == ',') {
                objects.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        objects.push_back(cur);
        return CoeffCategory::discrete(base_p, std::move(objects));
    }
    throw ValidationError("bad coefficient spec '" + spec + "' (use f<p>, q, z, discrete:...)");
}

Json modobj_to_json(const ModObj& a) {
    Json j;
    if (a.coeff.kind == CoeffCategory::Kind::Integers) {
        const Comp& c = a.comps[0];
        Mat pres(c.gens, c.tor.size());
        for (std::size_t i = 0; i < c.tor.size(); ++i)
            pres.at(i, i) = Scalar(c.tor[i]);
        j["presentation"] = mat_to_json(pres);
    } else {
        Json dims;
        for (std::size_t o = 0; o < a.comps.size(); ++o)
            dims[a.coeff.objects[o]] = a.comps[o].gens;
        j["dims"] = std::move(dims);
    }
    return j;
}

ModObj modobj_from_json(const Json& j, const CoeffCategory& c) {
    if (c.kind == CoeffCategory::Kind::Integers) {
        const Json& pres = j.at("presentation");
        std::size_t gens = pres.size();
        std::size_t rels = gens ? pres[0].size() : 0;
        Mat m = mat_from_json(pres, gens, rels);
        PresentedComp canon = canonicalize_presentation(static_cast<long>(gens), m);
        return ModObj::z_module(canon.comp.tor, canon.comp.free_rank());
    }
    std::vector<long> dims;
    for (const auto& name : c.objects)
        dims.push_back(j.at("dims").value(name, 0L));
    return ModObj::field_dims(c, std::move(dims));
}

Json modmap_to_json(const ModMap& f) {
    Json blocks;
    for (std::size_t o = 0; o < f.blocks().size(); ++o)
        blocks[f.dom().coeff.objects[o]] = mat_to_json(f.block(o));
    Json j;
    j["blocks"] = std::move(blocks);
    return j;
}

ModMap modmap_from_json(const Json& j, const ModObj& dom, const ModObj& cod) {
    std::vector<Mat> blocks;
    for (std::size_t o = 0; o < dom.comps.size(); ++o) {
        const std::string& name = dom.coeff.objects[o];
        std::size_t rows = cod.comps[o].gens, cols = dom.comps[o].gens;
        if (j.at("blocks").contains(name))
            blocks.push_back(mat_from_json(j.at("blocks").at(name), rows, cols));
        else
            blocks.push_back(Mat::zero(rows, cols));
    }
    return ModMap::make(dom, cod, std::move(blocks));
}

Json module_to_json(const TruncatedFIModule& v) {
    Json j;
    j["coeff"] = coeff_to_json(v.coeff);
    j["N"] = v.N;
    Json levels = Json::array();
    for (const auto& l : v.levels)
        levels.push_back(modobj_to_json(l));
    j["levels"] = std::move(levels);
    Json incl = Json::array();
    for (const auto& m : v.incl)
        incl.push_back(modmap_to_json(m));
    j["inclusions"] = std::move(incl);
    Json transp = Json::array();
    for (const auto& per_level : v.transp) {
        Json level = Json::array();
        for (const auto& m : per_level)
            level.push_back(modmap_to_json(m));
        transp.push_back(std::move(level));
    }
    j["transpositions"] = std::move(transp);
    return j;
}

TruncatedFIModule module_from_json(const Json& j) {
    CoeffCategory c = coeff_from_json(j.at("coeff"));
    int n = j.at("N").get<int>();
    if (n < 0)
        throw ValidationError("negative truncation in module file");
    std::vector<ModObj> levels;
    for (const auto& lj : j.at("levels"))
        levels.push_back(modobj_from_json(lj, c));
    if (levels.size() != static_cast<std::size_t>(n) + 1)
        throw ValidationError("module file has the wrong number of levels");
    std::vector<ModMap> incl;
    const Json& ij = j.at("inclusions");
    if (ij.size() != static_cast<std::size_t>(n))
        throw ValidationError("module file has the wrong number of inclusions");
    for (int k = 0; k < n; ++k)
        incl.push_back(modmap_from_json(ij[k], levels[k], levels[k + 1]));
    std::vector<std::vector<ModMap>> transp;
    const Json& tj = j.at("transpositions");
    if (tj.size() != levels.size())
        throw ValidationError("module file has the wrong number of transposition rows");
    for (int k = 0; k <= n; ++k) {
        std::vector<ModMap> row;
        for (const auto& mj : tj[k])
            row.push_back(modmap_from_json(mj, levels[k], levels[k]));
        transp.push_back(std::move(row));
    }
    return make_fi_module(std::move(c), n, std::move(levels), std::move(incl), std::move(transp));
}

Json morphism_to_json(const FIMorphism& f, const std::string& dom_path,
                      const std::string& cod_path) {
    Json j;
    j["domain_file"] = dom_path;
    j["codomain_file"] = cod_path;
    Json maps = Json::array();
    for (const auto& m : f.maps)
        maps.push_back(modmap_to_json(m));
    j["maps"] = std::move(maps);
    return j;
}

FIMorphism morphism_from_json(const Json& j, const TruncatedFIModule& dom,
                              const TruncatedFIModule& cod) {
    std::vector<ModMap> maps;
    const Json& mj = j.at("maps");
    if (mj.size() != dom.levels.size())
        throw ValidationError("morphism file has the wrong number of level maps");
    for (std::size_t n = 0; n < mj.size(); ++n)
        maps.push_back(modmap_from_json(mj[n], dom.levels[n], cod.levels[n]));
    return make_fi_morphism(dom, cod, std::move(maps));
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

TruncatedFIModule load_module_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open module file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError("bad JSON in '" + path + "': " + e.what());
    }
    return module_from_json(j);
}

void save_module_file(const TruncatedFIModule& v, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write module file '" + path + "'");
    out << canonical_dump(module_to_json(v));
}

} // namespace fimod
