#include "sasaki/json_io.hpp"

#include <limits>

namespace sasaki {

namespace {

const Int kI64Min{std::numeric_limits<long long>::min()};
const Int kI64Max{std::numeric_limits<long long>::max()};

Json vec_of_ints(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

} // namespace

Json int_to_json(const Int& v) {
    if (v >= kI64Min && v <= kI64Max) return v.convert_to<long long>();
    return v.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    fail("cli_io", "ParseError", "expected an integer or decimal string");
}

Json to_json(const IntVec& v) { return vec_of_ints(v.entries); }

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Manifold5& m) {
    Json j;
    j["rank"] = m.h2.rank;
    Json torsion = Json::array();
    for (const auto& t : m.h2.torsion)
        torsion.push_back(Json::array({int_to_json(t.p), t.exponent, t.multiplicity}));
    j["torsion"] = std::move(torsion);
    if (m.barden.is_infinite()) j["barden"] = "inf";
    else j["barden"] = m.barden.value();
    return j;
}

Manifold5 manifold5_from_json(const Json& j) {
    Manifold5 m;
    long long rank = j.at("rank").get<long long>();
    std::vector<TorsionComponent> torsion;
    if (j.contains("torsion"))
        for (const auto& t : j.at("torsion")) {
            if (!t.is_array() || t.size() != 3)
                fail("cli_io", "ParseError", "torsion entries are [p, i, c] triples");
            torsion.push_back({int_from_json(t[0]), t[1].get<long long>(), t[2].get<long long>()});
        }
    m.h2 = FinAbGroup::make(rank, std::move(torsion));
    const Json& b = j.at("barden");
    if (b.is_string() && b.get<std::string>() == "inf") m.barden = BardenIndex::infinity();
    else m.barden = BardenIndex::finite(b.get<long long>());
    m.validate();
    return m;
}

Json to_json(const BardenName& n) {
    Json j;
    j["name"] = n.str();
    switch (n.head) {
    case BardenName::Head::XMinus1: j["head"] = "X_-1"; break;
    case BardenName::Head::X0: j["head"] = "X_0"; break;
    case BardenName::Head::Xj: j["head"] = "X_" + std::to_string(n.head_j); break;
    case BardenName::Head::XInf: j["head"] = "X_inf"; break;
    }
    Json ks = Json::array();
    for (const Int& k : n.finite_ks) ks.push_back(int_to_json(k));
    j["summands"] = std::move(ks);
    j["s2xs3_summands"] = n.infinite_count;
    return j;
}

Json to_json(const SasakiDescriptor& d) {
    Json j;
    j["n"] = d.n;
    j["dim"] = d.dimension();
    j["order"] = d.order ? int_to_json(*d.order) : Json(nullptr);
    j["index"] = d.index ? int_to_json(*d.index) : Json(nullptr);
    j["type"] = to_string(d.stype);
    j["regularity"] = to_string(d.regularity);
    j["smooth"] = d.smooth;
    j["simply_connected"] = d.simply_connected ? Json(*d.simply_connected) : Json("unknown");
    j["toric_rank"] = d.toric_rank ? Json(*d.toric_rank) : Json(nullptr);
    j["eta_einstein"] = d.eta_einstein;
    j["label"] = d.label;
    return j;
}

SasakiDescriptor descriptor_from_json(const Json& j) {
    SasakiDescriptor d;
    d.n = j.at("n").get<long long>();
    if (j.contains("order") && !j.at("order").is_null()) d.order = int_from_json(j.at("order"));
    if (j.contains("index") && !j.at("index").is_null()) d.index = int_from_json(j.at("index"));
    if (j.contains("type")) {
        std::string t = j.at("type").get<std::string>();
        if (t == "positive") d.stype = SasakiTypeClass::Positive;
        else if (t == "negative") d.stype = SasakiTypeClass::Negative;
        else if (t == "null") d.stype = SasakiTypeClass::Null;
        else if (t == "indefinite") d.stype = SasakiTypeClass::Indefinite;
        else if (t == "undetermined") d.stype = SasakiTypeClass::Undetermined;
        else fail("cli_io", "ParseError", "unknown Sasakian type '" + t + "'");
    }
    if (j.contains("regularity")) {
        std::string r = j.at("regularity").get<std::string>();
        if (r == "regular") d.regularity = Regularity::Regular;
        else if (r == "quasi-regular") d.regularity = Regularity::QuasiRegular;
        else fail("cli_io", "ParseError", "unknown regularity '" + r + "'");
    }
    if (j.contains("smooth")) d.smooth = j.at("smooth").get<bool>();
    if (j.contains("simply_connected") && !j.at("simply_connected").is_string())
        d.simply_connected = j.at("simply_connected").get<bool>();
    if (j.contains("toric_rank") && !j.at("toric_rank").is_null())
        d.toric_rank = j.at("toric_rank").get<long long>();
    if (j.contains("eta_einstein")) d.eta_einstein = j.at("eta_einstein").get<bool>();
    if (j.contains("label")) d.label = j.at("label").get<std::string>();
    d.validate();
    return d;
}

Json to_json(const JoinResult& r) {
    Json j;
    j["descriptor"] = to_json(r.descriptor);
    j["k"] = Json::array({int_to_json(r.k1), int_to_json(r.k2)});
    j["quotient_order"] = int_to_json(r.quotient_order);
    j["fibre_view"] = r.fibre_view;
    return j;
}

Json to_json(const S3JoinReport& r) {
    Json j;
    j["l"] = Json::array({int_to_json(r.l1), int_to_json(r.l2)});
    j["fibre"] = r.fibre;
    j["base"] = r.base;
    j["h4_torsion"] = int_to_json(r.h4_torsion);
    if (r.homeo_s2xs5) j["homeo"] = "S2xS5";
    else j["homeo"] = Json(nullptr);
    j["orbifold_only"] = !r.smooth;
    return j;
}

Json to_json(const Census& c) {
    Json hist;
    for (const auto& [index, count] : c.histogram) hist[index.str()] = count;
    Json j;
    j["total"] = c.total;
    j["histogram"] = std::move(hist);
    return j;
}

Json to_json(const Fan2D& f) {
    Json rays = Json::array();
    for (const auto& v : f.rays) rays.push_back(Json::array({int_to_json(v[0]), int_to_json(v[1])}));
    Json j;
    j["rays"] = std::move(rays);
    return j;
}

Fan2D fan_from_json(const Json& j) {
    std::vector<std::array<Int, 2>> rays;
    for (const auto& v : j.at("rays")) {
        if (!v.is_array() || v.size() != 2)
            fail("cli_io", "ParseError", "rays are [x, y] pairs");
        rays.push_back({int_from_json(v[0]), int_from_json(v[1])});
    }
    return Fan2D::from_rays(std::move(rays));
}

Json to_json(const AmpleCertificate& c) {
    Json pairs = Json::array();
    for (const auto& [curve, value] : c.pairings)
        pairs.push_back(Json::array({curve, int_to_json(value)}));
    Json j;
    j["ample"] = c.ample;
    j["square"] = int_to_json(c.square);
    j["square_positive"] = c.square_positive;
    j["pairings"] = std::move(pairs);
    return j;
}

Json to_json(const TotalSpaceReport& r) {
    Json j;
    j["b2"] = r.b2;
    j["c1D"] = to_json(r.c1D);
    j["w2"] = to_json(r.w2);
    j["spin"] = r.spin;
    j["pi1"] = int_to_json(r.pi1_order);
    j["name"] = r.diffeo ? Json(r.diffeo->str()) : Json(nullptr);
    return j;
}

Json to_json(const WangZillerReport& r) {
    Json j;
    j["p"] = Json::array({r.p1, r.p2});
    j["k"] = Json::array({int_to_json(r.k1), int_to_json(r.k2)});
    j["dim"] = r.dim;
    j["b2"] = 1;
    j["c1D"] = int_to_json(r.c1D);
    j["w2"] = r.w2;
    j["spin"] = r.spin;
    j["pi1"] = int_to_json(r.pi1_order);
    j["simply_connected"] = r.simply_connected;
    j["name"] = r.name ? Json(*r.name) : Json(nullptr);
    return j;
}

Json to_json(const AbBasis& r) {
    Json j;
    j["a1"] = int_to_json(r.a1);
    j["a2"] = int_to_json(r.a2);
    j["positive"] = r.positive;
    j["c1D"] = int_to_json(r.c1D);
    return j;
}

Json to_json(const LermanCount& r) {
    Json j;
    j["count"] = int_to_json(r.count);
    j["suspect_inverted"] = r.suspect_inverted;
    return j;
}

Json to_json(const HirzebruchBundleReport& r) {
    Json j;
    j["name"] = r.name ? Json(*r.name) : Json(nullptr);
    j["w2"] = static_cast<int>(((r.c1D_closed % 2) + 2) % 2);
    j["c1D"] = int_to_json(r.c1D_closed);
    j["b2"] = 1;
    j["spin"] = r.spin;
    j["pi1"] = int_to_json(r.pi1_order);
    Json method;
    method["closed_form"] = Json{{"c1D", int_to_json(r.c1D_closed)}};
    method["lattice"] = Json{{"c1D", to_json(r.c1D_lattice)}, {"spin", r.spin}};
    j["method"] = std::move(method);
    j["agree"] = r.abs_agree && r.parity_agree;
    return j;
}

Json to_json(const BlowupBundleReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["l2"] = int_to_json(r.l2);
    j["square"] = int_to_json(r.square);
    j["square_positive"] = r.square_positive;
    j["b2"] = r.b2;
    j["spin"] = r.spin;
    j["name"] = r.name;
    j["name_alt"] = r.name_alt;
    Json method;
    method["closed_form"] = Json{{"w2_parity", r.closed_form_w2}};
    method["lattice"] = Json{{"spin", r.spin}};
    j["method"] = std::move(method);
    j["agree"] = r.methods_agree;
    return j;
}

namespace {

template <typename Row>
Json sweep_to_json(const SweepResult<Row>& r, const std::string& grid,
                   Json (*row_fn)(const Row&)) {
    Json rows = Json::array();
    Json failures = Json::array();
    for (const auto& row : r.rows) {
        Json jr = row_fn(row);
        rows.push_back(jr);
        if (!row.agree) failures.push_back(jr);
    }
    Json j;
    j["grid"] = grid;
    j["cells"] = r.rows.size();
    j["all_agree"] = r.all_agree;
    j["failures"] = std::move(failures);
    j["rows"] = std::move(rows);
    return j;
}

} // namespace

Json to_json(const SweepResult<HirzebruchSweepRow>& r) {
    return sweep_to_json<HirzebruchSweepRow>(r, "hirzebruch", [](const HirzebruchSweepRow& row) {
        Json j = to_json(row.report);
        j["n"] = row.report.n;
        j["l"] = Json::array({int_to_json(row.report.l1), int_to_json(row.report.l2)});
        j["agree"] = row.agree;
        return j;
    });
}

Json to_json(const SweepResult<WangZillerSweepRow>& r) {
    return sweep_to_json<WangZillerSweepRow>(r, "wang-ziller", [](const WangZillerSweepRow& row) {
        Json j = to_json(row.report);
        j["agree"] = row.agree;
        return j;
    });
}

Json to_json(const SweepResult<BlowupSweepRow>& r) {
    return sweep_to_json<BlowupSweepRow>(r, "blowup", [](const BlowupSweepRow& row) {
        Json j = to_json(row.report);
        j["agree"] = row.agree;
        return j;
    });
}

Json error_to_json(const DomainError& e) {
    Json j;
    j["error"] = Json{{"module", e.module_name()}, {"name", e.error_name()}, {"message", e.what()}};
    return j;
}

} // namespace sasaki
