// Copyright 2026 The Libra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "libra/error.h"
#include "libra/evaluator.h"
#include "libra/log_io.h"
#include "libra/pipeline.h"

namespace libra::cli {
namespace {

struct InputFlags {
  std::string format = "csv";
  std::string case_col = "case_id";
  std::string activity_col = "activity";
  std::string timestamp_col = "timestamp";
  std::string timestamp_format = std::string(kIso8601);
  char delimiter = ',';
};

void AddInputOptions(CLI::App* app, InputFlags& f) {
  app->add_option("--format", f.format, "Input format")
      ->check(CLI::IsMember({"csv", "xes"}))
      ->capture_default_str();
  app->add_option("--case-col", f.case_col, "Case column name, or zero-based index")
      ->capture_default_str();
  app->add_option("--activity-col", f.activity_col, "Activity column name, or index")
      ->capture_default_str();
  app->add_option("--timestamp-col", f.timestamp_col, "Timestamp column name, or index")
      ->capture_default_str();
  app->add_option("--timestamp-format", f.timestamp_format,
                  "'iso8601' or a strptime pattern such as '%m/%d/%Y %H:%M'")
      ->capture_default_str();
  app->add_option("--delimiter", f.delimiter, "CSV field delimiter")->capture_default_str();
}

ColumnSelector Selector(const std::string& s) {
  const bool numeric =
      !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  if (numeric) return static_cast<std::size_t>(std::stoull(s));
  return s;
}

CsvSchema Schema(const InputFlags& f) {
  CsvSchema schema;
  schema.case_column = Selector(f.case_col);
  schema.activity_column = Selector(f.activity_col);
  schema.timestamp_column = Selector(f.timestamp_col);
  schema.timestamp_format = f.timestamp_format;
  schema.delimiter = f.delimiter;
  return schema;
}

EventLog ReadLog(const std::string& path, const InputFlags& f) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  if (f.format == "xes") return ParseXes(in);
  return ParseCsv(in, Schema(f));
}

void WriteText(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

std::string FormatValue(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

int CliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differentially private event-log anonymization by Poisson subsampling"};
  app.require_subcommand(0, 1);

  InputFlags input_flags;
  std::string input_path, output_path, report_path;
  PrivacyConfig config;
  std::optional<int> alpha;
  bool zero_noise = false;
  std::optional<double> clip_override;
  int threads = 0;

  app.add_option("--input", input_path, "Event log to anonymize");
  AddInputOptions(&app, input_flags);
  app.add_option("--alpha", alpha, "Integer Renyi order (>= 2)");
  app.add_option("--delta", config.delta, "Target delta")->capture_default_str();
  app.add_option("--gamma", config.gamma, "Poisson sampling ratio")->capture_default_str();
  app.add_option("--scale", config.scale, "Laplace scale b")->capture_default_str();
  app.add_option("--omega", config.omega, "Relevance distance threshold")->capture_default_str();
  app.add_option("--p-hat", config.p_hat, "New-information probability bound")
      ->capture_default_str();
  app.add_option("--rho", config.rho, "Discovery-sufficiency confidence")->capture_default_str();
  app.add_option("--seed", config.seed, "Random seed (LIBRA_SEED overrides)")
      ->capture_default_str();
  app.add_flag("--eta-literal", config.eta_literal, "Run ceil(gamma * z) rounds");
  app.add_flag("--unsafe-zero-noise", zero_noise, "Disable all noise (testing only)");
  app.add_option("--unsafe-clip-threshold", clip_override,
                 "Replace the clipping threshold (testing only)");
  app.add_option("--output", output_path, "Anonymized CSV path ('-' for stdout)");
  app.add_option("--report", report_path, "Privacy report path (default: diagnostics)");
  app.add_option("--threads", threads, "Worker threads (0 = OpenMP default)")
      ->capture_default_str();

  CLI::App* evaluate = app.add_subcommand("evaluate", "EMD between DFGs of two logs");
  InputFlags eval_flags;
  std::string original_path, anonymized_path;
  evaluate->add_option("--original", original_path, "Original log")->required();
  evaluate->add_option("--anonymized", anonymized_path, "Anonymized log")->required();
  AddInputOptions(evaluate, eval_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (evaluate->parsed()) {
      const Dfg a = BuildDfg(ReadLog(original_path, eval_flags));
      const Dfg b = BuildDfg(ReadLog(anonymized_path, eval_flags));
      out << "emd_freq = " << FormatValue(EmdFrequency(a, b)) << '\n';
      out << "emd_time_hours = " << FormatValue(EmdTime(a, b)) << '\n';
      return kExitOk;
    }

    if (input_path.empty() || !alpha.has_value()) {
      err << (input_path.empty() ? "--input is required\n" : "--alpha is required\n");
      err << app.help();
      return kExitUsage;
    }
    config.alpha = *alpha;
    if (const char* env = std::getenv("LIBRA_SEED"); env != nullptr && *env != '\0') {
      const std::string_view text(env);
      const auto res = std::from_chars(text.data(), text.data() + text.size(), config.seed);
      if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        err << "invalid LIBRA_SEED '" << env << "'\n";
        return kExitUsage;
      }
    }

    const EventLog log = ReadLog(input_path, input_flags);
    RunOptions options;
    options.anonymizer.zero_noise = zero_noise;
    options.clip_threshold_override = clip_override;
    options.threads = threads;
    const RunResult result = Run(log, config, options);
    for (const std::string& w : result.warnings) err << "warning: " << w << '\n';

    CsvSchema out_schema = Schema(input_flags);
    if (input_flags.format == "xes") out_schema = CsvSchema{};
    WriteText(output_path, SerializeCsv(result.anonymized_log, out_schema), out);
    WriteText(report_path, FormatReport(result.report), err);
    return kExitOk;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotAnonymizable) {
      err << "log not anonymizable: all trace variants unique\n";
      return kExitNotAnonymizable;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace libra::cli
