#include "tvdw/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace tvdw::io {

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

double need_number(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number())
    throw domain_error(std::string("space spec: missing or non-numeric field \"") + field + "\"");
  return j[field].get<double>();
}

}  // namespace

MetricSpace space_from_json(const json& j) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw domain_error("space spec: missing field \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "interval") {
    double lo = need_number(j, "lo"), hi = need_number(j, "hi");
    double res = j.contains("resolution") ? need_number(j, "resolution") : 0.0;
    return MetricSpace::interval(lo, hi, res);
  }
  if (kind == "box") {
    if (!j.contains("lo") || !j["lo"].is_array() || !j.contains("hi") || !j["hi"].is_array())
      throw domain_error("space spec: box requires array fields \"lo\" and \"hi\"");
    return MetricSpace::box(j["lo"].get<std::vector<double>>(),
                            j["hi"].get<std::vector<double>>(), need_number(j, "resolution"));
  }
  if (kind == "point_cloud") {
    if (!j.contains("points") || !j["points"].is_array())
      throw domain_error("space spec: point_cloud requires array field \"points\"");
    std::vector<PointRef> pts;
    for (const auto& row : j["points"]) {
      if (!row.is_array() || row.empty() || row.size() > 3)
        throw domain_error("space spec: each point must be an array of 1..3 coordinates");
      PointRef p;
      for (std::size_t i = 0; i < row.size(); ++i) p.c[i] = row[i].get<double>();
      pts.push_back(p);
    }
    double res = j.contains("resolution") ? need_number(j, "resolution") : 0.0;
    return MetricSpace::point_cloud(std::move(pts), res);
  }
  if (kind == "finite_matrix") {
    if (!j.contains("table") || !j["table"].is_array())
      throw domain_error("space spec: finite_matrix requires array field \"table\"");
    return MetricSpace::finite_matrix(j["table"].get<std::vector<std::vector<double>>>());
  }
  if (kind == "cantor") {
    if (!j.contains("level") || !j["level"].is_number_integer())
      throw domain_error("space spec: cantor requires integer field \"level\"");
    return MetricSpace::cantor(j["level"].get<int>());
  }
  if (kind == "lattice_line") {
    double res = j.contains("resolution") ? need_number(j, "resolution") : 0.0;
    return MetricSpace::lattice_line(res);
  }
  throw domain_error("space spec: unknown kind \"" + kind + "\"");
}

MetricSpace parse_space_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw domain_error(std::string("space spec: invalid JSON: ") + e.what());
  }
  return space_from_json(j);
}

json space_to_json(const MetricSpace& space) {
  json j;
  j["kind"] = to_string(space.kind());
  switch (space.kind()) {
    case SpaceKind::interval:
      j["lo"] = space.as_interval().lo;
      j["hi"] = space.as_interval().hi;
      j["resolution"] = space.as_interval().res;
      break;
    case SpaceKind::box: {
      const auto& d = space.as_box();
      std::vector<double> lo(d.lo.begin(), d.lo.begin() + d.dim);
      std::vector<double> hi(d.hi.begin(), d.hi.begin() + d.dim);
      j["lo"] = lo;
      j["hi"] = hi;
      j["resolution"] = d.res;
      break;
    }
    case SpaceKind::point_cloud: {
      json pts = json::array();
      for (const auto& p : space.as_cloud().pts) pts.push_back({p.c[0], p.c[1], p.c[2]});
      j["points"] = pts;
      j["resolution"] = space.as_cloud().res;
      break;
    }
    case SpaceKind::finite_matrix: {
      const auto& d = space.as_matrix();
      json rows = json::array();
      for (std::size_t i = 0; i < d.n; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < d.n; ++k) row.push_back(d.d[i * d.n + k]);
        rows.push_back(row);
      }
      j["table"] = rows;
      break;
    }
    case SpaceKind::cantor:
      j["level"] = space.as_cantor().level;
      break;
    case SpaceKind::lattice_line:
      j["resolution"] = space.as_lattice().res;
      break;
  }
  return j;
}

json net_to_json(const Net& net) {
  json j;
  j["epsilon"] = net.epsilon;
  if (net.implicit()) {
    j["implicit_lattice"] = {{"scale", net.lattice->scale},
                             {"base", net.lattice->base},
                             {"level", net.lattice->level}};
  } else {
    json pts = json::array();
    for (const auto& p : net.points) {
      if (p.index >= 0)
        pts.push_back(p.index);
      else
        pts.push_back(p.c[0]);
    }
    j["points"] = pts;
  }
  return j;
}

Net net_from_json(const json& j, SpacePtr space) {
  Net net;
  net.space = std::move(space);
  if (!j.contains("epsilon") || !j["epsilon"].is_number())
    throw domain_error("net: missing numeric field \"epsilon\"");
  net.epsilon = j["epsilon"].get<double>();
  if (j.contains("implicit_lattice")) {
    const auto& lat = j["implicit_lattice"];
    ImplicitLattice l;
    l.scale = lat.contains("scale") ? lat["scale"].get<double>() : net.epsilon;
    l.base = lat.contains("base") ? lat["base"].get<std::int64_t>() : 0;
    l.level = lat.contains("level") ? lat["level"].get<int>() : 0;
    net.lattice = l;
    return net;
  }
  if (!j.contains("points") || !j["points"].is_array())
    throw domain_error("net: missing array field \"points\"");
  for (const auto& v : j["points"]) {
    if (net.space->kind() == SpaceKind::finite_matrix)
      net.points.push_back(PointRef::row(v.get<std::int64_t>()));
    else
      net.points.push_back(PointRef::at(v.get<double>()));
  }
  return net;
}

json point_to_json(const PointRef& p) {
  if (p.index >= 0) return json{{"index", p.index}};
  return json{{"x", p.c[0]}};
}

json estimate_to_json(const lip::Estimate& e) {
  json j;
  j["functional"] = lip::to_string(e.functional);
  j["point"] = point_to_json(e.point);
  if (e.radius > 0) j["radius"] = e.radius;
  if (e.r_max > 0) {
    j["r_min"] = e.r_min;
    j["r_max"] = e.r_max;
  }
  j["value"] = e.value;
  j["diverged"] = e.diverged;
  if (e.threshold > 0) j["threshold"] = e.threshold;
  j["bound_side"] = e.bound_side == lip::Estimate::Bound::lower
                        ? "lower"
                        : (e.bound_side == lip::Estimate::Bound::upper ? "upper" : "two_sided");
  if (e.has_witness) j["witness"] = point_to_json(e.witness);
  if (e.has_pair) {
    j["witness"] = point_to_json(e.witness);
    j["witness2"] = point_to_json(e.witness2);
  }
  return j;
}

json hermeticity_to_json(const por::HermeticityReport& rep) {
  json j;
  j["point"] = point_to_json(rep.point);
  j["isolated"] = rep.isolated;
  j["H_estimate"] = rep.H_estimate;
  j["p_s_estimate"] = rep.p_s_estimate;
  j["r_grid"] = rep.r_grid;
  j["ratio_per_r"] = rep.ratio_per_r;
  json rh = json::array();
  for (const auto& [lambda, r] : rep.RH_table) rh.push_back({{"lambda", lambda}, {"RH", r}});
  j["RH_table"] = rh;
  return j;
}

json witness_to_json(const thm::WitnessRecord& rec) {
  json j;
  j["n"] = rec.n;
  j["u"] = point_to_json(rec.u);
  j["rho"] = rec.rho;
  j["ratio"] = rec.ratio;
  j["guaranteed_bound"] = rec.guaranteed_bound;
  j["case"] = rec.case_tag == thm::WitnessCase::net_point ? "net_point" : "off_net";
  j["pass"] = rec.pass;
  j["margin"] = rec.margin;
  return j;
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ",";
    os << cells[i];
  }
  os << "\n";
  body_ += os.str();
}

std::string CsvWriter::str() const {
  std::ostringstream os;
  os << "# tvdw v1\n";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) os << ",";
    os << columns_[i];
  }
  os << "\n" << body_;
  return os.str();
}

}  // namespace tvdw::io
