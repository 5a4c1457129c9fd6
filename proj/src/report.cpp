#include "ialg/report.hpp"

#include <fstream>
#include <system_error>
#include <unistd.h>

#include "ialg/error.hpp"

namespace ialg {

using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void require_exportable(const Magma& m) {
  if (m.order() > kExportLimit) {
    throw Error(ErrorKind::OrderTooLarge, "tables are limited to " + std::to_string(kExportLimit) +
                                              " elements, got " + std::to_string(m.order()));
  }
}

json members_json(const Magma& m, const std::vector<Index>& members) {
  json out = json::array();
  for (Index i : members) out.push_back(m.label(i));
  return out;
}

}  // namespace

std::string table_csv(const Magma& m) {
  require_exportable(m);
  const auto labels = m.labels();
  std::string out = "*";
  for (const auto& l : labels) out += ',' + csv_field(l);
  out += '\n';
  for (Index a = 0; a < m.order(); ++a) {
    out += csv_field(labels[a]);
    for (Index b = 0; b < m.order(); ++b) out += ',' + csv_field(labels[m.op(a, b)]);
    out += '\n';
  }
  return out;
}

json table_json(const Magma& m) {
  require_exportable(m);
  json rows = json::array();
  for (Index a = 0; a < m.order(); ++a) {
    json row = json::array();
    for (Index b = 0; b < m.order(); ++b) row.push_back(m.op(a, b));
    rows.push_back(std::move(row));
  }
  return json{{"elements", m.labels()}, {"table", std::move(rows)}};
}

void export_table(const Structure& s, TableFormat format, const std::filesystem::path& path) {
  const auto m = s.magma();
  const std::string body = format == TableFormat::csv ? table_csv(*m) : table_json(*m).dump() + '\n';
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
    out << body;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorKind::IoError, "short write to " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error(ErrorKind::IoError, "cannot rename into " + path.string() + ": " + ec.message());
  }
}

json to_json(const StructureClass& c) {
  return json{{"label", to_string(c.label)},        {"closed", c.closed},
              {"associative", c.associative},       {"has_identity", c.has_identity},
              {"all_invertible", c.all_invertible}, {"latin_square", c.latin_square},
              {"commutative", c.commutative}};
}

json to_json(const Structure& s, const IdentityVerdict& v) {
  json out{{"grade", to_string(v.grade)}, {"checked", v.checked}};
  const auto m = s.magma();
  if (v.counterexample) {
    const auto& a = *v.counterexample;
    out["counterexample"] = json{{"x", m->label(a[0])}, {"y", m->label(a[1])}, {"z", m->label(a[2])}};
  }
  if (!v.witness.empty()) {
    json w = json::array();
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (v.witness[i]) {
        w.push_back(members_json(*s.component_magma(i), *v.witness[i]));
      } else {
        w.push_back(nullptr);
      }
    }
    out["witness"] = std::move(w);
  }
  return out;
}

json to_json(const Structure& s, const SpecialElementReport& r) {
  const auto m = s.magma();
  json elements = json::array();
  for (const auto& e : r.elements) {
    json cert = json::object();
    if (e.partner) cert["partner"] = m->label(*e.partner);
    if (e.power) cert[r.kind == SpecialKind::cauchy ? "order" : "power"] = *e.power;
    if (r.kind == SpecialKind::idempotent) cert["square"] = m->label(m->op(e.element, e.element));
    json item{{"element", m->label(e.element)}, {"certificate", std::move(cert)}, {"trivial", e.trivial}};
    if (e.active_mask) item["active_mask"] = *e.active_mask;
    elements.push_back(std::move(item));
  }
  return json{{"kind", to_string(r.kind)}, {"quasi", r.quasi}, {"elements", std::move(elements)}};
}

json to_json(const Structure& s, const Substructure& sub) {
  json parts = json::array();
  for (std::size_t i = 0; i < sub.parts.size(); ++i) {
    const auto& p = sub.parts[i];
    parts.push_back(json{{"members", members_json(*s.component_magma(i), p.members)},
                         {"class", to_json(p.cls)}});
  }
  return json{{"order", sub.order()}, {"parts", std::move(parts)}};
}

json to_json(const Structure& s, const LagrangeReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json item = to_json(s, e.sub);
    item["divides"] = e.divides;
    entries.push_back(std::move(item));
  }
  return json{{"structure_order", r.structure_order},
              {"grade", to_string(r.grade)},
              {"complete", r.complete},
              {"substructures", std::move(entries)}};
}

json to_json(const Structure& s, const WitnessResult& w) {
  static constexpr const char* kGrades[] = {"Smarandache", "QuasiSmarandache", "None"};
  json wanted = json::array();
  for (auto c : w.wanted) wanted.push_back(to_string(c));
  json parts = json::array();
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    if (w.parts[i]) {
      parts.push_back(members_json(*s.component_magma(i), w.parts[i]->members));
    } else {
      parts.push_back(nullptr);
    }
  }
  return json{{"grade", kGrades[static_cast<int>(w.grade)]}, {"wanted", std::move(wanted)}, {"witness", std::move(parts)}};
}

}  // namespace ialg
