#include "drinfeld/serialize.hpp"

#include <fstream>

namespace drinfeld {

Json to_json(const Cyclotomic& v) {
    Json terms = Json::array();
    for (const auto& [e, c] : v.terms()) {
        if (!c.get_num().fits_slong_p() || !c.get_den().fits_slong_p())
            throw std::overflow_error("to_json: rational coefficient exceeds 64 bits");
        terms.push_back(Json{{"e", e},
                             {"num", static_cast<std::int64_t>(c.get_num().get_si())},
                             {"den", static_cast<std::int64_t>(c.get_den().get_si())}});
    }
    return Json{{"n", v.conductor()}, {"terms", std::move(terms)}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw ParseError("cyclotomic: expected {n, terms}");
    long n = j.at("n").get<long>();
    Cyclotomic::TermList raw;
    for (const auto& t : j.at("terms")) {
        long e = t.at("e").get<long>();
        long num = t.at("num").get<long>();
        long den = t.at("den").get<long>();
        if (den <= 0) throw ParseError("cyclotomic: nonpositive denominator");
        Rational c(num);
        c /= den;
        raw.emplace_back(e, c);
    }
    Cyclotomic v = Cyclotomic::from_terms(n, raw);
    // The wire format is canonical; reject non-canonical input.
    if (v.conductor() != n || v.terms().size() != raw.size())
        throw ParseError("cyclotomic: value is not in canonical form");
    for (size_t i = 0; i < raw.size(); ++i)
        if (v.terms()[i] != raw[i]) throw ParseError("cyclotomic: value is not in canonical form");
    return v;
}

Json to_json(const ModularData& md) {
    Json meta{{"group", md.meta.group_spec},
              {"twist", md.meta.twist},
              {"order", md.meta.group_order},
              {"conductor", md.meta.conductor},
              {"rank", md.rank}};
    Json labels = Json::array();
    for (const auto& l : md.labels)
        labels.push_back(Json{{"class", l.class_rep}, {"char", l.char_ordinal}, {"dim", l.dimension}});
    Json tvec = Json::array();
    for (long i = 0; i < md.rank; ++i) tvec.push_back(to_json(md.t_at(i)));
    Json smat = Json::array();
    for (long i = 0; i < md.rank; ++i) {
        Json row = Json::array();
        for (long j = 0; j < md.rank; ++j) row.push_back(to_json(md.s_at(i, j)));
        smat.push_back(std::move(row));
    }
    return Json{{"meta", std::move(meta)},
                {"labels", std::move(labels)},
                {"T", std::move(tvec)},
                {"S", std::move(smat)}};
}

ModularData modular_data_from_json(const Json& j) {
    try {
        ModularData md;
        const Json& meta = j.at("meta");
        md.meta.group_spec = meta.at("group").get<std::string>();
        md.meta.twist = meta.at("twist").get<std::vector<long>>();
        md.meta.group_order = meta.at("order").get<long>();
        md.meta.conductor = meta.at("conductor").get<long>();
        md.rank = meta.at("rank").get<long>();
        if (md.rank <= 0) throw ParseError("modular data: nonpositive rank");

        for (const auto& l : j.at("labels")) {
            LabelInfo info;
            info.class_rep = l.at("class").get<std::string>();
            info.char_ordinal = l.at("char").get<int>();
            info.dimension = l.at("dim").get<long>();
            md.labels.push_back(std::move(info));
        }
        if (static_cast<long>(md.labels.size()) != md.rank)
            throw ParseError("modular data: label count != rank");

        std::map<Cyclotomic, std::int32_t> ids;
        auto intern = [&](const Json& cj) {
            Cyclotomic v = cyclotomic_from_json(cj);
            if (md.meta.conductor % v.conductor() != 0)
                throw ParseError("modular data: entry conductor does not divide meta conductor");
            auto [it, fresh] = ids.try_emplace(std::move(v), static_cast<std::int32_t>(md.pool.size()));
            if (fresh) md.pool.push_back(it->first);
            return it->second;
        };
        const Json& tvec = j.at("T");
        if (static_cast<long>(tvec.size()) != md.rank)
            throw ParseError("modular data: T length != rank");
        for (const auto& tj : tvec) md.T.push_back(intern(tj));
        const Json& smat = j.at("S");
        if (static_cast<long>(smat.size()) != md.rank)
            throw ParseError("modular data: S row count != rank");
        for (const auto& row : smat) {
            if (static_cast<long>(row.size()) != md.rank)
                throw ParseError("modular data: S is not square");
            for (const auto& sj : row) md.S.push_back(intern(sj));
        }
        return md;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("modular data: ") + e.what());
    }
}

Json to_json(const Permutation& p) {
    return Json(p.image());
}

Permutation permutation_from_json(const Json& j) {
    try {
        return Permutation(j.get<std::vector<long>>());
    } catch (const Json::exception& e) {
        throw ParseError(std::string("permutation: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("permutation: ") + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump() << "\n";
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open: " + path);
    try {
        Json j;
        in >> j;
        return j;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("json parse: ") + e.what());
    }
}

}  // namespace drinfeld
