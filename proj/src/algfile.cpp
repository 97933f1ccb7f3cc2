#include "contactlie/algfile.hpp"

#include <json.hpp>
#include <sstream>

namespace contactlie {

using nlohmann::json;

namespace {

std::vector<AlgebraFile::Entry> parse_entries(const json& arr, int dim, const char* what) {
  std::vector<AlgebraFile::Entry> out;
  for (const auto& e : arr) {
    AlgebraFile::Entry entry;
    if (!e.contains("i") || !e.contains("j") || !e.contains("value"))
      throw FileFormatError(std::string(what) + " entry needs fields i, j, value");
    entry.i = e.at("i").get<int>();
    entry.j = e.at("j").get<int>();
    if (entry.i < 1 || entry.j > dim || entry.i >= entry.j)
      throw FileFormatError(std::string(what) + " entry needs 1 <= i < j <= dim, got (" +
                            std::to_string(entry.i) + "," + std::to_string(entry.j) + ")");
    for (const auto& [key, value] : e.at("value").items()) {
      int k = std::stoi(key);
      if (k < 1 || k > dim)
        throw FileFormatError(std::string(what) + " value index out of range: " + key);
      entry.coeffs.emplace_back(k, value.get<std::string>());
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw FileFormatError(std::string("JSON parse error: ") + err.what());
  }
  AlgebraFile file;
  if (!doc.contains("dim")) throw FileFormatError("missing field: dim");
  file.dim = doc.at("dim").get<int>();
  if (file.dim < 1) throw FileFormatError("dim must be positive");
  if (doc.contains("basis")) {
    file.basis = doc.at("basis").get<std::vector<std::string>>();
    if (int(file.basis.size()) != file.dim)
      throw FileFormatError("basis label count must equal dim");
  }
  if (doc.contains("params")) {
    for (const auto& p : doc.at("params")) {
      ParamDecl decl;
      decl.name = p.at("name").get<std::string>();
      if (p.contains("relation")) decl.relation = p.at("relation").get<std::string>();
      if (p.contains("reciprocal")) decl.reciprocal = p.at("reciprocal").get<std::string>();
      file.params.push_back(std::move(decl));
    }
  }
  if (!doc.contains("bracket")) throw FileFormatError("missing field: bracket");
  file.bracket = parse_entries(doc.at("bracket"), file.dim, "bracket");
  if (doc.contains("phi2")) file.phi2 = parse_entries(doc.at("phi2"), file.dim, "phi2");
  if (doc.contains("metadata")) {
    const auto& meta = doc.at("metadata");
    if (meta.contains("contact_form_index"))
      file.contact_form_index = meta.at("contact_form_index").get<int>();
    if (meta.contains("darboux")) file.darboux = meta.at("darboux").get<bool>();
  }
  return file;
}

std::string serialize_algebra_file(const AlgebraFile& file) {
  json doc;
  doc["dim"] = file.dim;
  if (!file.basis.empty()) doc["basis"] = file.basis;
  json params = json::array();
  for (const auto& p : file.params) {
    json jp;
    jp["name"] = p.name;
    if (!p.relation.empty()) jp["relation"] = p.relation;
    if (!p.reciprocal.empty()) jp["reciprocal"] = p.reciprocal;
    params.push_back(jp);
  }
  if (!params.empty()) doc["params"] = params;
  auto dump_entries = [](const std::vector<AlgebraFile::Entry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) {
      json je;
      je["i"] = e.i;
      je["j"] = e.j;
      json value;
      for (const auto& [k, expr] : e.coeffs) value[std::to_string(k)] = expr;
      je["value"] = value;
      arr.push_back(je);
    }
    return arr;
  };
  doc["bracket"] = dump_entries(file.bracket);
  if (!file.phi2.empty()) doc["phi2"] = dump_entries(file.phi2);
  if (file.contact_form_index || file.darboux) {
    json meta;
    if (file.contact_form_index) meta["contact_form_index"] = *file.contact_form_index;
    if (file.darboux) meta["darboux"] = *file.darboux;
    doc["metadata"] = meta;
  }
  return doc.dump(2) + "\n";
}

LoadedAlgebra load_algebra(const AlgebraFile& file, bool enforce_jacobi) {
  std::vector<ParamInfo> infos;
  for (const auto& p : file.params) {
    ParamInfo info;
    info.name = p.name;
    if (!p.relation.empty()) info.relation_tail = parse_relation(p.relation, p.name);
    infos.push_back(std::move(info));
  }
  for (std::size_t i = 0; i < file.params.size(); ++i) {
    if (file.params[i].reciprocal.empty()) continue;
    bool found = false;
    for (std::size_t j = 0; j < file.params.size(); ++j)
      if (file.params[j].name == file.params[i].reciprocal) {
        infos[i].reciprocal_of = int(j);
        found = true;
      }
    if (!found)
      throw FileFormatError("reciprocal partner not declared: " + file.params[i].reciprocal);
  }
  LoadedAlgebra out;
  out.ctx = ScalarContext::make(std::move(infos));
  auto build = [&](const std::vector<AlgebraFile::Entry>& entries) {
    Cochain2 c(file.dim, out.ctx);
    for (const auto& e : entries)
      for (const auto& [k, expr] : e.coeffs) {
        Scalar v = parse_scalar(expr, out.ctx);
        if (!v.is_zero()) c.add(e.i, e.j, k, v);
      }
    return c;
  };
  out.algebra =
      LieAlgebra::make(file.dim, build(file.bracket), out.ctx, file.basis, enforce_jacobi);
  if (!file.phi2.empty()) out.phi2 = build(file.phi2);
  out.contact_form_index = file.contact_form_index.value_or(1);
  return out;
}

AlgebraFile to_algebra_file(const FamilyInstance& inst) {
  AlgebraFile file;
  file.dim = inst.algebra.dim();
  file.basis = inst.algebra.labels();
  // only parameters still occurring in the table survive into the file
  std::vector<bool> used(inst.ctx->size(), false);
  for (const auto& [key, c] : inst.algebra.bracket().entries())
    for (const auto& [mono, coeff] : c.terms())
      for (std::size_t t = 0; t < mono.size(); ++t)
        if (mono[t] > 0) used[t] = true;
  for (std::size_t t = 0; t < inst.ctx->size(); ++t) {
    const auto& info = inst.ctx->param(t);
    if (info.reciprocal_of >= 0 && used[std::size_t(info.reciprocal_of)]) used[t] = true;
  }
  for (const auto& p : inst.def.params) {
    int idx = inst.ctx->index_of(p.name);
    if (idx < 0 || !used[std::size_t(idx)]) continue;
    file.params.push_back(p);
  }
  std::map<std::pair<int, int>, AlgebraFile::Entry> rows;
  for (const auto& [key, c] : inst.algebra.bracket().entries()) {
    auto& entry = rows[{key[0], key[1]}];
    entry.i = key[0];
    entry.j = key[1];
    entry.coeffs.emplace_back(key[2], c.to_string());
  }
  for (auto& [ij, entry] : rows) file.bracket.push_back(std::move(entry));
  if (inst.def.is_contact && inst.def.contact_form.empty()) file.contact_form_index = 1;
  if (inst.def.is_contact) file.darboux = inst.def.darboux_expected;
  return file;
}

static const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::ok: return "ok";
    case CheckStatus::fail: return "fail";
    default: return "n/a";
  }
}

std::string report_to_json(const VerificationReport& report) {
  json doc;
  doc["family"] = report.family;
  doc["p"] = report.p;
  doc["dim"] = report.dim;
  doc["mode"] = report.mode;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json jc;
    jc["name"] = c.name;
    jc["status"] = status_name(c.status);
    jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  doc["checks"] = checks;
  doc["ok"] = report.ok();
  return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << report.family << " (dim " << report.dim << ", mode " << report.mode << ")\n";
  for (const auto& c : report.checks) {
    out << "  " << c.name << ": " << status_name(c.status);
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
  }
  out << (report.ok() ? "  => PASS" : "  => FAIL") << "\n";
  return out.str();
}

}  // namespace contactlie
