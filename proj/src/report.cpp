#include "avalanche/report.hpp"

#include <json.hpp>
#include <sstream>

#include "avalanche/anf.hpp"
#include "avalanche/formats.hpp"

namespace avalanche {

using ordered_json = nlohmann::ordered_json;

std::string vector_bits(uint64_t alpha, int n) {
  std::string s(n, '0');
  for (int j = 0; j < n; ++j)
    if ((alpha >> (n - 1 - j)) & 1) s[j] = '1';
  return s;
}

AnalysisReport analyze_function(const BooleanFunction& f, std::string source) {
  AnalysisReport r;
  r.source = std::move(source);
  r.n = f.num_vars();
  r.gac = analyze(f);
  r.bounds = bounds_report(r.n, std::nullopt, std::nullopt, &r.gac);
  r.hex = to_hex(f);
  r.anf_terms = anf_summary(f).terms;
  if (r.anf_terms <= kAnfTermCap) r.anf = to_anf_string(to_anf(f));
  if (r.n <= kBlockRenderMaxVars) r.blocks = to_block_string(blockseq_of(f));
  return r;
}

namespace {

ordered_json vector_list(const std::vector<uint64_t>& vs, int n) {
  ordered_json arr = ordered_json::array();
  for (uint64_t v : vs) arr.push_back(vector_bits(v, n));
  return arr;
}

ordered_json report_json(const AnalysisReport& r) {
  ordered_json j;
  j["input"] = {{"source", r.source}, {"n", r.n}};

  ordered_json fn;
  fn["hex"] = r.hex;
  fn["weight"] = r.gac.weight;
  fn["balanced"] = r.gac.balanced;
  fn["algebraic_degree"] = r.gac.algebraic_degree;
  fn["anf_terms"] = r.anf_terms;
  fn["anf"] = r.anf ? ordered_json(*r.anf) : ordered_json(nullptr);
  fn["blocks"] = r.blocks ? ordered_json(*r.blocks) : ordered_json(nullptr);
  j["function"] = fn;

  ordered_json ind;
  ind["nonlinearity"] = r.gac.nonlinearity;
  ind["sigma"] = to_string(r.gac.sigma);
  ind["delta_abs"] = r.gac.delta_abs;
  ind["sac"] = r.gac.sac;
  ind["pc_degree"] = r.gac.pc_degree;
  ind["pc_count"] = r.gac.pc_vectors.size();
  ind["non_pc_count"] = r.gac.non_pc_vectors.size();
  ind["linear_structure_count"] = r.gac.linear_structures.size();
  ind["linear_structures_even_weight"] = r.gac.linear_structures_even_weight;
  ind["pc_vectors"] = r.gac.pc_vectors.size() <= kVectorListCap
                          ? vector_list(r.gac.pc_vectors, r.n)
                          : ordered_json(nullptr);
  ind["non_pc_vectors"] = r.gac.non_pc_vectors.size() <= kVectorListCap
                              ? vector_list(r.gac.non_pc_vectors, r.n)
                              : ordered_json(nullptr);
  ind["linear_structures"] = r.gac.linear_structures.size() <= kVectorListCap
                                 ? vector_list(r.gac.linear_structures, r.n)
                                 : ordered_json(nullptr);
  j["indicators"] = ind;

  ordered_json b;
  b["t"] = r.bounds.t ? ordered_json(*r.bounds.t) : ordered_json(nullptr);
  b["l_h_even"] = r.bounds.l_h_even ? ordered_json(*r.bounds.l_h_even)
                                    : ordered_json(nullptr);
  ordered_json rows = ordered_json::array();
  for (const BoundLine& line : r.bounds.lines) {
    ordered_json row;
    row["name"] = line.name;
    row["value"] = line.value;
    row["satisfied"] =
        line.satisfied ? ordered_json(*line.satisfied) : ordered_json(nullptr);
    row["note"] = line.note;
    rows.push_back(row);
  }
  b["rows"] = rows;
  j["bounds"] = b;

  j["violations"] = r.bounds.violations;
  return j;
}

}  // namespace

std::string serialize_report(const AnalysisReport& r) {
  return report_json(r).dump(2) + "\n";
}

std::string normalize_document(const std::string& text) {
  return ordered_json::parse(text).dump(2) + "\n";
}

std::string render_table(const AnalysisReport& r) {
  std::ostringstream os;
  auto line = [&](const char* key, const std::string& value) {
    os << "  " << key;
    for (size_t i = std::char_traits<char>::length(key); i < 30; ++i) os << ' ';
    os << value << "\n";
  };
  os << "function (" << r.source << ", n=" << r.n << ")\n";
  line("hex", r.hex);
  if (r.anf) line("anf", *r.anf);
  if (r.blocks) line("blocks", *r.blocks);
  line("weight", std::to_string(r.gac.weight));
  line("balanced", r.gac.balanced ? "yes" : "no");
  line("algebraic degree", std::to_string(r.gac.algebraic_degree));
  line("nonlinearity", std::to_string(r.gac.nonlinearity));
  line("sigma (sum of squares)", to_string(r.gac.sigma));
  line("delta (absolute)", std::to_string(r.gac.delta_abs));
  line("SAC", r.gac.sac ? "yes" : "no");
  line("PC degree", std::to_string(r.gac.pc_degree));
  line("PC vectors", std::to_string(r.gac.pc_vectors.size()));
  if (!r.gac.non_pc_vectors.empty() &&
      r.gac.non_pc_vectors.size() <= kVectorListCap) {
    std::string vs;
    for (uint64_t v : r.gac.non_pc_vectors) {
      if (!vs.empty()) vs += ' ';
      vs += vector_bits(v, r.n);
    }
    line("non-PC vectors", vs);
  } else {
    line("non-PC vectors", std::to_string(r.gac.non_pc_vectors.size()));
  }
  if (r.gac.linear_structures.size() <= kVectorListCap) {
    std::string vs;
    for (uint64_t v : r.gac.linear_structures) {
      if (!vs.empty()) vs += ' ';
      vs += vector_bits(v, r.n);
    }
    line("linear structures", vs.empty() ? "none" : vs);
  } else {
    line("linear structures", std::to_string(r.gac.linear_structures.size()));
  }
  os << "bounds\n";
  for (const BoundLine& bl : r.bounds.lines) {
    std::string status = !bl.satisfied ? "-" : (*bl.satisfied ? "ok" : "VIOLATED");
    line(bl.name.c_str(), bl.value + "  [" + status + "] " + bl.note);
  }
  if (!r.bounds.violations.empty()) {
    std::string vs;
    for (const std::string& v : r.bounds.violations) {
      if (!vs.empty()) vs += ' ';
      vs += v;
    }
    line("violations", vs);
  }
  return os.str();
}

}  // namespace avalanche
