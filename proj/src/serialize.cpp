#include "vdyn/serialize.hpp"

#include <fstream>
#include <sstream>

namespace vdyn {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad field '") + key + "': " + e.what());
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back() += c;
    }
  }
  return out;
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path.string() + "' failed");
}

}  // namespace

Json to_json(const PStrictLabeling& f) {
  Json fibers = Json::object();
  for (Letter p : kLetters) fibers[std::string(1, to_char(p))] = f.fiber(p);
  return {{"ell", f.ell()}, {"q", f.q()}, {"fibers", fibers}};
}

PStrictLabeling labeling_from_json(const Json& j) {
  const Json& fibers = field(j, "fibers");
  PStrictLabeling::Fibers out;
  for (Letter p : kLetters) {
    const std::string key(1, to_char(p));
    out[fiber_index(p)] = get<std::vector<int>>(fibers, key.c_str());
  }
  return PStrictLabeling(get<int>(j, "ell"), get<int>(j, "q"), std::move(out));
}

Json to_json(const MultiKrewerasWord& w) {
  Json blocks = Json::array();
  for (const auto& b : w.blocks()) blocks.push_back({b.a, b.b, b.c});
  return {{"ell", w.ell()}, {"q", w.q()}, {"word", w.str()}, {"blocks", blocks}};
}

MultiKrewerasWord word_from_json(const Json& j) {
  if (j.is_string()) return MultiKrewerasWord::parse(j.get<std::string>());
  std::vector<BlockCounts> blocks;
  for (const auto& b : field(j, "blocks")) {
    if (!b.is_array() || b.size() != 3) throw Error(ErrorCode::kParse, "block must be [nA, nB, nC]");
    blocks.push_back({b[0].get<int>(), b[1].get<int>(), b[2].get<int>()});
  }
  return MultiKrewerasWord(get<int>(j, "ell"), get<int>(j, "q"), std::move(blocks));
}

Json to_json(const PPartition& f) {
  Json values = Json::object();
  for (std::size_t e = 0; e < f.values().size(); ++e)
    values[f.poset().element(static_cast<int>(e)).str()] = f.values()[e];
  Json out = Json::object();
  if (auto k = v_chain_length(f.poset())) {
    out["poset"] = "VxK";
    out["k"] = *k;
  }
  out["ell"] = f.ell();
  out["values"] = values;
  return out;
}

PPartition ppartition_from_json(const Json& j) {
  if (get<std::string>(j, "poset") != "VxK")
    throw Error(ErrorCode::kParse, "only V x [k] P-partitions can be read back");
  const auto poset = v_times_chain(get<int>(j, "k"));
  const Json& values = field(j, "values");
  std::vector<int> out(poset->size());
  for (std::size_t e = 0; e < out.size(); ++e)
    out[e] = get<int>(values, poset->element(static_cast<int>(e)).str().c_str());
  return PPartition(poset, get<int>(j, "ell"), std::move(out));
}

Json to_json(const LinearExtension& ext) {
  Json labels = Json::object();
  for (std::size_t e = 0; e < ext.labels().size(); ++e)
    labels[ext.poset().element(static_cast<int>(e)).str()] = ext.labels()[e];
  return {{"labels", labels}};
}

Json to_json(const KrewerasWord& w) { return w.str(); }

Json to_json(const OrbitReport& r) {
  Json checks = Json::object();
  for (const auto& [k, v] : r.checks) checks[k] = v;
  return {{"action", r.action}, {"params", r.params},     {"count", r.count},
          {"orbit_sizes", r.orbit_sizes}, {"order", r.order}, {"checks", checks}};
}

OrbitReport orbit_report_from_json(const Json& j) {
  OrbitReport r;
  r.action = get<std::string>(j, "action");
  r.params = field(j, "params");
  r.count = get<std::uint64_t>(j, "count");
  r.orbit_sizes = get<std::vector<std::uint64_t>>(j, "orbit_sizes");
  r.order = get<std::uint64_t>(j, "order");
  for (const auto& [k, v] : field(j, "checks").items()) r.checks[k] = v.get<bool>();
  return r;
}

Json to_json(const VerificationReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims)
    claims.push_back({{"id", c.id}, {"params", c.params}, {"pass", c.pass}, {"counterexample", c.counterexample}});
  return {{"suite", r.suite}, {"claims", claims}, {"duration_ms", r.duration_ms}};
}

VerificationReport verification_report_from_json(const Json& j) {
  VerificationReport r;
  r.suite = get<std::string>(j, "suite");
  for (const auto& c : field(j, "claims"))
    r.claims.push_back({get<std::string>(c, "id"), field(c, "params"), get<bool>(c, "pass"),
                        field(c, "counterexample")});
  r.duration_ms = get<std::int64_t>(j, "duration_ms");
  return r;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw Error(ErrorCode::kInvalidArgument, "unknown format '" + name + "'");
}

std::string to_csv(const OrbitReport& r) {
  std::vector<std::string> checks;
  for (const auto& [k, v] : r.checks) checks.push_back(k + "=" + (v ? "true" : "false"));
  std::ostringstream os;
  os << "action,params,count,orbit_sizes,order,checks\n"
     << csv_quote(r.action) << ',' << csv_quote(r.params.dump()) << ',' << r.count << ','
     << join(r.orbit_sizes, ";") << ',' << r.order << ',' << csv_quote(join(checks, ";")) << '\n';
  return os.str();
}

std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite,id,params,pass,counterexample\n";
  for (const auto& c : r.claims)
    os << csv_quote(r.suite) << ',' << csv_quote(c.id) << ',' << csv_quote(c.params.dump()) << ','
       << (c.pass ? "true" : "false") << ',' << csv_quote(c.counterexample.dump()) << '\n';
  return os.str();
}

std::vector<std::uint64_t> orbit_sizes_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string header, row;
  if (!std::getline(in, header) || !std::getline(in, row)) throw Error(ErrorCode::kParse, "CSV needs a header and a row");
  const auto names = csv_split(header);
  const auto cells = csv_split(row);
  const auto it = std::find(names.begin(), names.end(), "orbit_sizes");
  const auto col = static_cast<std::size_t>(it - names.begin());
  if (it == names.end() || col >= cells.size()) throw Error(ErrorCode::kParse, "no orbit_sizes column");
  std::vector<std::uint64_t> sizes;
  std::istringstream field_in(cells[col]);
  for (std::string tok; std::getline(field_in, tok, ';');) {
    try {
      std::size_t used = 0;
      sizes.push_back(std::stoull(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "bad orbit size '" + tok + "'");
    }
  }
  return sizes;
}

void export_report(const OrbitReport& r, const std::filesystem::path& path, ReportFormat format) {
  write_file(path, format == ReportFormat::kJson ? to_json(r).dump(2) + "\n" : to_csv(r));
}

void export_report(const VerificationReport& r, const std::filesystem::path& path, ReportFormat format) {
  write_file(path, format == ReportFormat::kJson ? to_json(r).dump(2) + "\n" : to_csv(r));
}

}  // namespace vdyn
