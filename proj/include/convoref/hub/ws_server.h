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

#ifndef CONVOREF_HUB_WS_SERVER_H_
#define CONVOREF_HUB_WS_SERVER_H_

#include <cstdint>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "convoref/hub/hub.h"

namespace convoref::hub {

struct ServerOptions {
  // "host:port"; port 0 picks a free port.
  std::string bind = "127.0.0.1:8765";
  std::size_t io_threads = 1;
  // How often Hub::Tick runs.
  double tick_interval_ms = 100;
  std::size_t max_frame_bytes = 64 * 1024;
};

// Splits "host:port". Throws Error(kConfigInvalid).
std::pair<std::string, uint16_t> ParseBindAddress(const std::string &bind);

// WebSocket endpoint at /ws feeding a Hub. Plain HTTP GET /healthz answers
// 200; other paths 404.
class WsServer {
 public:
  WsServer(Hub &hub, ServerOptions options);
  ~WsServer();

  WsServer(const WsServer &) = delete;
  WsServer &operator=(const WsServer &) = delete;

  // Binds and starts serving on background threads. Throws Error(kIoError)
  // if the address cannot be bound.
  void Start();

  // Closes the listener and every connection, then joins the threads.
  void Stop();

  uint16_t port() const;
  std::string url() const;  // ws://host:port/ws

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace convoref::hub

#endif  // CONVOREF_HUB_WS_SERVER_H_
