// Copyright 2026 The Convoref Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Operator entry point: serve, replay, extract and bench.
//
// stdout carries only the command's payload; diagnostics go to stderr.
// Exit codes: 0 success, 1 internal failure, 2 input or configuration
// error, 3 connectivity error.

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "convoref/app/bench.h"
#include "convoref/app/config.h"
#include "convoref/app/replay_client.h"
#include "convoref/app/runtime.h"
#include "convoref/common/clock.h"
#include "convoref/common/error.h"
#include "convoref/hub/ws_client.h"
#include "convoref/ingest/replay.h"

namespace {

using convoref::Error;
using convoref::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitConnect = 3;

std::atomic<bool> g_stop{false};

void OnSignal(int) { g_stop = true; }

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Common {
  std::string config_path;
  // "json" or "text"; each command has its own default.
  std::string output;
};

convoref::app::ServerConfig LoadServerConfig(const Common &common) {
  return common.config_path.empty()
             ? convoref::app::DefaultConfig()
             : convoref::app::LoadConfig(common.config_path);
}

// Extraction parameter overrides shared by extract and bench.
struct ParamFlags {
  std::optional<double> damping;
  std::optional<int> window;
  std::optional<std::string> gazetteer;
  std::optional<std::string> stopwords;

  void Add(CLI::App *cmd) {
    cmd->add_option("--damping", damping, "TextRank damping factor");
    cmd->add_option("--window", window, "Co-occurrence window");
    cmd->add_option("--gazetteer", gazetteer, "Gazetteer file");
    cmd->add_option("--stopwords", stopwords, "Stopword file");
  }

  convoref::nlp::ExtractionParams Apply(
      convoref::nlp::ExtractionParams params) const {
    if (damping) params.damping = *damping;
    if (window) params.window = *window;
    if (gazetteer) params.gazetteer_path = *gazetteer;
    if (stopwords) params.stopword_path = *stopwords;
    params.Validate();
    return params;
  }
};

int Serve(const Common &common, const std::optional<std::string> &bind,
          const std::optional<std::string> &fixture_dir,
          const std::optional<std::string> &session_log,
          const std::string &port_file, bool from_stdin,
          const std::string &stdin_session) {
  convoref::app::ServerConfig config = LoadServerConfig(common);
  if (bind) config.server.bind = *bind;
  if (fixture_dir) config.providers.fixture_dir = *fixture_dir;
  if (session_log) config.hub.session_log = *session_log;
  convoref::app::Validate(config);

  convoref::app::Runtime runtime(config);
  runtime.Start();
  std::cerr << "convoref: listening on " << runtime.url() << std::endl;
  if (!port_file.empty()) {
    std::ofstream(port_file) << runtime.port() << "\n";
  }
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);

  if (from_stdin) {
    // Each stdin line is one final segment of the given session; blank and
    // '#' comment lines are skipped, as in replay scripts.
    runtime.hub().EnsureSession(stdin_session);
    std::string line;
    while (!g_stop && std::getline(std::cin, line)) {
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      runtime.hub().SubmitSegment(stdin_session, line, true);
    }
    runtime.hub().Drain();
    if (!g_stop) {
      std::cerr << "convoref: stdin closed; serving until interrupted"
                << std::endl;
    }
  }
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  std::cerr << "convoref: shutting down" << std::endl;
  runtime.Stop();
  return kExitOk;
}

int Replay(const Common &common, const std::string &script,
           std::optional<std::string> url, std::optional<double> wpm,
           std::optional<double> upm, const std::string &session,
           double time_scale, int linger_ms) {
  convoref::app::ReplayClientOptions opts;
  if (!url && !common.config_path.empty()) {
    auto config = convoref::app::LoadConfig(common.config_path);
    auto [host, port] = convoref::hub::ParseBindAddress(config.server.bind);
    if (host == "0.0.0.0" || host.empty()) host = "127.0.0.1";
    url = "ws://" + host + ":" + std::to_string(port) + "/ws";
  }
  if (url) opts.url = *url;
  if (wpm) opts.words_per_min = *wpm;
  if (upm) opts.updates_per_min = *upm;
  opts.session_id = session;
  opts.time_scale = time_scale;
  opts.linger = std::chrono::milliseconds(linger_ms);
  opts.cancel = &g_stop;
  convoref::hub::ParseWsUrl(opts.url);

  auto plan = convoref::ingest::PlanReplay(convoref::ingest::ReadScript(script),
                                           opts.words_per_min,
                                           opts.updates_per_min);
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);

  convoref::app::ReplaySummary summary;
  try {
    summary = convoref::app::ReplayToHub(plan, opts);
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kIoError) {
      std::cerr << "convoref: " << e.what() << std::endl;
      return kExitConnect;
    }
    throw;
  }
  if (common.output == "json") {
    std::cout << summary.ToJson().dump(2) << std::endl;
  } else {
    std::cout << summary.ToText();
  }
  return kExitOk;
}

int Extract(const Common &common, const ParamFlags &flags,
            const std::string &input) {
  auto params = flags.Apply(LoadServerConfig(common).params);
  std::string text = ReadFile(input);
  auto extractor = convoref::app::MakeExtractor(params);
  auto keywords = convoref::app::ExtractDocument(extractor, text);
  if (common.output == "json") {
    std::cout << convoref::app::KeywordsToJson(keywords).dump(2) << "\n";
  } else {
    std::cout << convoref::app::KeywordsToText(keywords);
  }
  return kExitOk;
}

int Bench(const Common &common, const ParamFlags &flags,
          const std::string &corpus) {
  auto params = flags.Apply(LoadServerConfig(common).params);
  std::string text = ReadFile(corpus);
  auto extractor = convoref::app::MakeExtractor(params);
  auto report = convoref::app::RunBench(extractor, text);
  if (common.output == "json") {
    std::cout << report.ToJson().dump(2) << "\n";
  } else {
    std::cout << report.ToText();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"convoref: real-time conversation keyword and reference hub"};
  app.require_subcommand(1);
  // --config may also follow the subcommand.
  app.fallthrough();
  Common common;
  app.add_option("-c,--config", common.config_path, "Server config (JSON)")
      ->check(CLI::ExistingFile);

  auto add_output = [&](CLI::App *cmd) {
    cmd->add_option("-o,--output", common.output, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  // serve
  CLI::App *serve = app.add_subcommand("serve", "Run the WebSocket hub");
  std::optional<std::string> bind, fixture_dir, session_log;
  std::string port_file, stdin_session = "default";
  bool from_stdin = false;
  serve->add_option("--bind", bind, "host:port (port 0 picks one)");
  serve->add_option("--fixture-dir", fixture_dir, "Reference fixture dir");
  serve->add_option("--session-log", session_log, "Append broadcasts here");
  serve->add_option("--port-file", port_file, "Write the bound port here");
  serve->add_flag("--stdin", from_stdin,
                  "Read transcript lines from stdin into a session");
  serve->add_option("--session", stdin_session, "Session for --stdin input");

  // replay
  CLI::App *replay =
      app.add_subcommand("replay", "Stream a script to a hub as a speaker");
  std::string script, replay_session = "replay";
  std::optional<std::string> url;
  std::optional<double> wpm, upm;
  double time_scale = 1.0;
  int linger_ms = 1000;
  replay->add_option("script", script, "Replay script")->required();
  replay->add_option("--url", url, "Hub URL, ws://host:port/ws");
  replay->add_option("--wpm", wpm, "Speaking rate, words per minute")
      ->check(CLI::PositiveNumber);
  replay->add_option("--upm,--updates-per-min", upm,
                     "Recognition updates per minute")
      ->check(CLI::PositiveNumber);
  replay->add_option("--session", replay_session, "Session to join");
  replay->add_option("--time-scale", time_scale, "Speed-up factor")
      ->check(CLI::PositiveNumber);
  replay->add_option("--linger-ms", linger_ms,
                     "Listen this long after the last segment");
  add_output(replay);

  // extract
  CLI::App *extract =
      app.add_subcommand("extract", "Extract keywords from a text file");
  std::string input;
  ParamFlags extract_flags;
  extract->add_option("input", input, "Text file, one utterance per line")
      ->required();
  extract_flags.Add(extract);
  add_output(extract);

  // bench
  CLI::App *bench = app.add_subcommand("bench", "Measure extraction speed");
  std::string corpus;
  ParamFlags bench_flags;
  bench->add_option("corpus", corpus, "Corpus, one utterance per line")
      ->required();
  bench_flags.Add(bench);
  add_output(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  // extract defaults to JSON; the other commands to text.
  if (common.output.empty()) common.output = extract->parsed() ? "json" : "text";

  try {
    if (serve->parsed()) {
      return Serve(common, bind, fixture_dir, session_log, port_file,
                   from_stdin, stdin_session);
    }
    if (replay->parsed()) {
      return Replay(common, script, url, wpm, upm, replay_session, time_scale,
                    linger_ms);
    }
    if (extract->parsed()) return Extract(common, extract_flags, input);
    if (bench->parsed()) return Bench(common, bench_flags, corpus);
  } catch (const Error &e) {
    std::cerr << "convoref: " << e.what() << std::endl;
    switch (e.code()) {
      case ErrorCode::kIoError:
      case ErrorCode::kConfigInvalid:
      case ErrorCode::kEmptySegment:
        return kExitInput;
      default:
        return kExitFailure;
    }
  } catch (const std::exception &e) {
    std::cerr << "convoref: " << e.what() << std::endl;
    return kExitFailure;
  }
  return kExitFailure;
}
