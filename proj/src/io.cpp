#include "wtomo/io.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "wtomo/povm.hpp"

namespace wtomo {

namespace {

// %.17g round-trips doubles exactly; the shorter form is for plot data.
std::string fmt_full(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string fmt_short(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& text, long line_no,
                    const std::string& what) {
  try {
    std::size_t consumed = 0;
    const double value = std::stod(text, &consumed);
    while (consumed < text.size() && std::isspace(
        static_cast<unsigned char>(text[consumed]))) ++consumed;
    if (consumed != text.size())
      throw ParseError("trailing characters in " + what + ": '" + text + "'",
                       line_no);
    return value;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("cannot parse " + what + ": '" + text + "'", line_no);
  }
}

long parse_long(const std::string& text, long line_no,
                const std::string& what) {
  const double value = parse_double(text, line_no, what);
  if (value != std::floor(value))
    throw ParseError(what + " must be an integer: '" + text + "'", line_no);
  return static_cast<long>(value);
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

void write_counts_csv(std::ostream& out, const CountsFile& file) {
  out << "alpha,i,j,count\n";
  for (int alpha = 0; alpha < 16; ++alpha) {
    const auto [i, j] = outcome_pair(alpha);
    out << alpha << ',' << i << ',' << j << ','
        << fmt_full(file.counts.counts[alpha]) << '\n';
  }
  out << "# mean_pairs=" << fmt_full(file.counts.mean_pairs) << '\n';
  if (file.seed) out << "# seed=" << *file.seed << '\n';
  if (file.eta) out << "# eta=" << fmt_full(*file.eta) << '\n';
}

void write_counts_csv(const std::string& path, const CountsFile& file) {
  auto out = open_output(path);
  write_counts_csv(out, file);
}

CountsFile read_counts_csv(std::istream& in) {
  CountsFile file;
  std::string line;
  long line_no = 0;

  if (!std::getline(in, line))
    throw ParseError("empty counts file", 1);
  ++line_no;
  if (strip_cr(line) != "alpha,i,j,count")
    throw ParseError("expected header 'alpha,i,j,count'", line_no);

  std::array<bool, 16> seen{};
  int rows = 0;
  std::optional<double> mean_pairs;

  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string body = line.substr(1);
      const std::size_t start = body.find_first_not_of(' ');
      if (start == std::string::npos) continue;
      body = body.substr(start);
      const std::size_t eq = body.find('=');
      if (eq == std::string::npos) continue;  // free-form comment
      const std::string key = body.substr(0, eq);
      const std::string value = body.substr(eq + 1);
      if (key == "mean_pairs") {
        mean_pairs = parse_double(value, line_no, "mean_pairs");
      } else if (key == "seed") {
        try {
          file.seed = std::stoull(value);
        } catch (const std::exception&) {
          throw ParseError("cannot parse seed: '" + value + "'", line_no);
        }
      } else if (key == "eta") {
        file.eta = parse_double(value, line_no, "eta");
      }
      continue;
    }

    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 4)
      throw ParseError("expected 4 fields 'alpha,i,j,count', got " +
                       std::to_string(fields.size()), line_no);
    const long alpha = parse_long(fields[0], line_no, "alpha");
    const long i = parse_long(fields[1], line_no, "i");
    const long j = parse_long(fields[2], line_no, "j");
    const double count = parse_double(fields[3], line_no, "count");
    if (alpha < 0 || alpha > 15)
      throw ParseError("alpha out of range 0..15", line_no);
    if (alpha != outcome_index(static_cast<int>(i), static_cast<int>(j)))
      throw ParseError("alpha " + std::to_string(alpha) +
                       " inconsistent with (i,j) = (" + std::to_string(i) +
                       "," + std::to_string(j) + ")", line_no);
    if (seen[static_cast<std::size_t>(alpha)])
      throw ParseError("duplicate row for alpha " + std::to_string(alpha),
                       line_no);
    if (!(count >= 0.0) || !std::isfinite(count))
      throw ParseError("count must be finite and nonnegative", line_no);
    seen[static_cast<std::size_t>(alpha)] = true;
    file.counts.counts[alpha] = count;
    ++rows;
  }

  if (rows != 16)
    throw ParseError("expected 16 data rows, got " + std::to_string(rows),
                     line_no);
  if (!mean_pairs)
    throw ParseError("missing required metadata '# mean_pairs=<N>'", line_no);
  if (!(*mean_pairs > 0.0) || !std::isfinite(*mean_pairs))
    throw ParseError("mean_pairs must be positive and finite", line_no);
  file.counts.mean_pairs = *mean_pairs;
  return file;
}

CountsFile read_counts_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_counts_csv(in);
}

void write_correlation_csv(std::ostream& out, const CorrelationScan& scan) {
  out << "angle_deg,expected,noisy\n";
  for (std::size_t k = 0; k < scan.angles.size(); ++k) {
    out << fmt_short(scan.angles[k] * 180.0 / std::numbers::pi) << ','
        << fmt_short(scan.expected[k]) << ',' << fmt_short(scan.noisy[k])
        << '\n';
  }
}

void write_correlation_csv(const std::string& path,
                           const CorrelationScan& scan) {
  auto out = open_output(path);
  write_correlation_csv(out, scan);
}

void write_sweep_csv(std::ostream& out,
                     const std::vector<SweepRecord>& records) {
  out << "eta,mean_pairs,trial,fidelity,purity_est,purity_true,"
         "concurrence_est,concurrence_true,chi2,evaluations,converged\n";
  for (const SweepRecord& r : records) {
    out << fmt_short(r.eta) << ',' << fmt_short(r.mean_pairs) << ','
        << r.trial << ',' << fmt_short(r.fidelity) << ','
        << fmt_short(r.purity_estimated) << ',' << fmt_short(r.purity_true)
        << ',' << fmt_short(r.concurrence_estimated) << ','
        << fmt_short(r.concurrence_true) << ',' << fmt_short(r.chi2) << ','
        << r.evaluations << ',' << (r.converged ? 1 : 0) << '\n';
  }
}

void write_sweep_csv(const std::string& path,
                     const std::vector<SweepRecord>& records) {
  auto out = open_output(path);
  write_sweep_csv(out, records);
}

void write_sweep_summary_csv(std::ostream& out,
                             const std::vector<SweepSummary>& summaries) {
  out << "eta,mean_pairs,trials,fidelity_mean,fidelity_min,fidelity_max,"
         "purity_est_mean,purity_true,concurrence_est_mean,concurrence_true\n";
  for (const SweepSummary& s : summaries) {
    out << fmt_short(s.eta) << ',' << fmt_short(s.mean_pairs) << ','
        << s.trials << ',' << fmt_short(s.fidelity_mean) << ','
        << fmt_short(s.fidelity_min) << ',' << fmt_short(s.fidelity_max)
        << ',' << fmt_short(s.purity_estimated_mean) << ','
        << fmt_short(s.purity_true) << ','
        << fmt_short(s.concurrence_estimated_mean) << ','
        << fmt_short(s.concurrence_true) << '\n';
  }
}

void write_sweep_summary_csv(const std::string& path,
                             const std::vector<SweepSummary>& summaries) {
  auto out = open_output(path);
  write_sweep_summary_csv(out, summaries);
}

std::string state_json(const EstimationResult& result,
                       const std::optional<ReferenceComparison>& reference) {
  nlohmann::json doc;
  nlohmann::json matrix = nlohmann::json::array();
  for (int row = 0; row < 4; ++row) {
    nlohmann::json row_json = nlohmann::json::array();
    for (int col = 0; col < 4; ++col) {
      const Complex entry = result.sigma(row, col);
      row_json.push_back({entry.real(), entry.imag()});
    }
    matrix.push_back(row_json);
  }
  doc["matrix"] = matrix;
  doc["chi2"] = result.chi2;
  doc["evaluations"] = result.evaluations;
  doc["converged"] = result.converged;
  if (reference) {
    doc["reference"] = {
        {"eta", reference->eta},
        {"fidelity", reference->fidelity},
        {"purity_est", reference->purity_estimated},
        {"purity_true", reference->purity_true},
        {"concurrence_est", reference->concurrence_estimated},
        {"concurrence_true", reference->concurrence_true},
    };
  }
  return doc.dump(2) + "\n";
}

void write_state_json(const std::string& path, const EstimationResult& result,
                      const std::optional<ReferenceComparison>& reference) {
  auto out = open_output(path);
  out << state_json(result, reference);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace wtomo
