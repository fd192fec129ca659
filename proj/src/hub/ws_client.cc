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

#include "convoref/hub/ws_client.h"

#include <atomic>
#include <deque>
#include <future>
#include <mutex>
#include <thread>

#include <boost/asio/connect.hpp>
#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/post.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include "convoref/common/error.h"

namespace convoref::hub {

namespace beast = boost::beast;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

WsUrl ParseWsUrl(const std::string &url) {
  const std::string scheme = "ws://";
  if (url.rfind(scheme, 0) != 0) {
    throw Error(ErrorCode::kConfigInvalid, "expected ws:// url, got " + url);
  }
  std::string rest = url.substr(scheme.size());
  std::size_t slash = rest.find('/');
  std::string authority = rest.substr(0, slash);
  WsUrl out;
  out.target = slash == std::string::npos ? "/ws" : rest.substr(slash);
  std::size_t colon = authority.rfind(':');
  if (colon == std::string::npos || colon == 0 ||
      colon + 1 == authority.size()) {
    throw Error(ErrorCode::kConfigInvalid, "url needs host:port: " + url);
  }
  out.host = authority.substr(0, colon);
  out.port = authority.substr(colon + 1);
  return out;
}

struct WsClient::Impl : std::enable_shared_from_this<Impl> {
  net::io_context ioc;
  websocket::stream<beast::tcp_stream> ws{net::make_strand(ioc)};
  beast::flat_buffer buffer;
  std::deque<std::string> outbox;
  bool writing = false;
  std::atomic<bool> open{false};
  std::atomic<bool> paused{false};
  bool reading = false;
  std::mutex mu;
  std::optional<int> close_code;
  std::thread thread;
  std::promise<void> closed;
  std::shared_future<void> closed_future{closed.get_future().share()};
  bool closed_set = false;
  FrameHandler *on_frame = nullptr;
  CloseHandler *on_close = nullptr;

  void DoRead() {
    if (paused) {
      reading = false;
      return;
    }
    reading = true;
    ws.async_read(buffer, [self = shared_from_this()](beast::error_code ec,
                                                      std::size_t) {
      self->OnRead(ec);
    });
  }

  void OnRead(beast::error_code ec) {
    if (ec) {
      Finished();
      return;
    }
    std::string frame = beast::buffers_to_string(buffer.data());
    buffer.consume(buffer.size());
    if (on_frame && *on_frame) (*on_frame)(frame);
    DoRead();
  }

  void DoWrite() {
    if (writing || outbox.empty() || !open) return;
    writing = true;
    ws.async_write(net::buffer(outbox.front()),
                   [self = shared_from_this()](beast::error_code ec,
                                               std::size_t) {
                     self->writing = false;
                     if (ec) return;
                     self->outbox.pop_front();
                     self->DoWrite();
                   });
  }

  void Finished() {
    if (closed_set) return;
    closed_set = true;
    open = false;
    int code = 1006;
    std::string reason;
    if (ws.reason().code != websocket::close_code::none) {
      code = static_cast<int>(ws.reason().code);
      reason = std::string(ws.reason().reason.c_str());
    }
    {
      std::lock_guard<std::mutex> lock(mu);
      close_code = code;
    }
    if (on_close && *on_close) (*on_close)(code, reason);
    closed.set_value();
  }
};

WsClient::WsClient() : impl_(std::make_shared<Impl>()) {
  impl_->on_frame = &on_frame_;
  impl_->on_close = &on_close_;
}

WsClient::~WsClient() {
  if (impl_->open) Close();
  impl_->ioc.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

void WsClient::Connect(const std::string &url,
                       std::chrono::milliseconds timeout) {
  WsUrl parsed = ParseWsUrl(url);
  auto impl = impl_;
  try {
    tcp::resolver resolver(impl->ioc);
    auto results = resolver.resolve(parsed.host, parsed.port);
    auto &layer = beast::get_lowest_layer(impl->ws);
    layer.expires_after(timeout);
    std::promise<beast::error_code> done;
    auto fut = done.get_future();
    layer.async_connect(results, [&](beast::error_code ec,
                                     const tcp::endpoint &) {
      if (ec) {
        done.set_value(ec);
        return;
      }
      beast::get_lowest_layer(impl->ws).expires_never();
      impl->ws.set_option(websocket::stream_base::timeout{
          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
              timeout),
          websocket::stream_base::none(), false});
      impl->ws.text(true);
      impl->ws.async_handshake(
          parsed.host + ":" + parsed.port, parsed.target,
          [&](beast::error_code hec) { done.set_value(hec); });
    });
    impl->ioc.restart();
    impl->ioc.run_for(timeout + std::chrono::milliseconds(500));
    if (fut.wait_for(std::chrono::seconds(0)) != std::future_status::ready) {
      throw Error(ErrorCode::kIoError, "timed out connecting to " + url);
    }
    if (auto ec = fut.get()) {
      throw Error(ErrorCode::kIoError,
                  "cannot connect to " + url + ": " + ec.message());
    }
  } catch (const boost::system::system_error &e) {
    throw Error(ErrorCode::kIoError,
                "cannot connect to " + url + ": " + e.what());
  }
  impl->ws.set_option(
      websocket::stream_base::timeout::suggested(beast::role_type::client));
  impl->open = true;
  impl->ioc.restart();
  net::post(impl->ws.get_executor(), [impl] { impl->DoRead(); });
  impl->thread = std::thread([impl] { impl->ioc.run(); });
}

void WsClient::Send(std::string text) {
  auto impl = impl_;
  net::post(impl->ws.get_executor(), [impl, text = std::move(text)]() mutable {
    impl->outbox.push_back(std::move(text));
    impl->DoWrite();
  });
}

void WsClient::Close(int code) {
  auto impl = impl_;
  if (!impl->open) return;
  net::post(impl->ws.get_executor(), [impl, code] {
    if (!impl->open) return;
    impl->ws.async_close(
        websocket::close_reason(static_cast<websocket::close_code>(code)),
        [impl](beast::error_code) {
          // The read loop observes the close and finishes; if it is paused,
          // finish here.
          if (!impl->reading) impl->Finished();
        });
  });
  impl->closed_future.wait_for(std::chrono::seconds(2));
}

void WsClient::PauseReading() { impl_->paused = true; }

bool WsClient::connected() const { return impl_->open; }

std::optional<int> WsClient::close_code() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->close_code;
}

}  // namespace convoref::hub
