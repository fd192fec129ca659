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

#include "convoref/hub/ws_server.h"

#include <atomic>
#include <chrono>
#include <deque>
#include <mutex>
#include <optional>
#include <set>

#include <boost/asio/bind_executor.hpp>
#include <boost/asio/dispatch.hpp>
#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/post.hpp>
#include <boost/asio/steady_timer.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

#include "convoref/common/error.h"

namespace convoref::hub {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

std::pair<std::string, uint16_t> ParseBindAddress(const std::string &bind) {
  auto colon = bind.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == bind.size()) {
    throw Error(ErrorCode::kConfigInvalid,
                "bind address must be host:port, got '" + bind + "'");
  }
  std::string host = bind.substr(0, colon);
  if (host.size() > 2 && host.front() == '[' && host.back() == ']') {
    host = host.substr(1, host.size() - 2);
  }
  try {
    std::size_t used = 0;
    int port = std::stoi(bind.substr(colon + 1), &used);
    if (used != bind.size() - colon - 1 || port < 0 || port > 65535) {
      throw std::out_of_range("port");
    }
    return {host, static_cast<uint16_t>(port)};
  } catch (const std::exception &) {
    throw Error(ErrorCode::kConfigInvalid, "bad port in '" + bind + "'");
  }
}

namespace {

class WsSession;

// Live sessions, so Stop() can close them.
class SessionSet {
 public:
  void Add(const std::shared_ptr<WsSession> &s) {
    std::lock_guard<std::mutex> lock(mu_);
    sessions_.insert(s);
  }
  void Remove(const std::shared_ptr<WsSession> &s) {
    std::lock_guard<std::mutex> lock(mu_);
    sessions_.erase(s);
  }
  std::vector<std::shared_ptr<WsSession>> Snapshot() {
    std::lock_guard<std::mutex> lock(mu_);
    return {sessions_.begin(), sessions_.end()};
  }

 private:
  std::mutex mu_;
  std::set<std::shared_ptr<WsSession>> sessions_;
};

class WsSession : public Transport,
                  public std::enable_shared_from_this<WsSession> {
 public:
  WsSession(tcp::socket socket, Hub &hub, SessionSet &set,
            std::size_t max_frame)
      : ws_(std::move(socket)), hub_(hub), set_(set), max_frame_(max_frame) {}

  void Run(http::request<http::string_body> req) {
    ws_.set_option(
        websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.read_message_max(max_frame_);
    ws_.text(true);
    ws_.async_accept(req, beast::bind_front_handler(&WsSession::OnAccept,
                                                    shared_from_this()));
  }

  void Wake() override {
    net::post(ws_.get_executor(),
              [self = shared_from_this()] { self->DoWrite(); });
  }

  void Close(int code, const std::string &reason) override {
    net::post(ws_.get_executor(), [self = shared_from_this(), code, reason] {
      if (!self->close_request_) self->close_request_.emplace(code, reason);
      self->DoWrite();
    });
  }

 private:
  void OnAccept(beast::error_code ec) {
    if (ec) return;
    set_.Add(shared_from_this());
    conn_ = hub_.Attach(weak_from_this());
    DoRead();
  }

  void DoRead() {
    ws_.async_read(buffer_, beast::bind_front_handler(&WsSession::OnRead,
                                                      shared_from_this()));
  }

  void OnRead(beast::error_code ec, std::size_t) {
    if (ec) {
      Finish();
      return;
    }
    const double received = MonotonicMs();
    if (ws_.got_text()) {
      hub_.OnFrame(conn_, beast::buffers_to_string(buffer_.data()), received);
    } else {
      conn_->Deliver(MakeError(conn_->session_id(),
                               ErrorCodeName(ErrorCode::kBadMessage),
                               "binary frames are not supported"));
    }
    buffer_.consume(buffer_.size());
    DoRead();
  }

  void DoWrite() {
    if (writing_ || closing_ || !conn_) return;
    if (auto frame = conn_->PopFrame()) {
      writing_ = true;
      current_ = std::move(*frame);
      ws_.async_write(net::buffer(current_),
                      beast::bind_front_handler(&WsSession::OnWrite,
                                                shared_from_this()));
      return;
    }
    if (close_request_) {
      closing_ = true;
      websocket::close_reason reason(
          static_cast<websocket::close_code>(close_request_->first),
          close_request_->second);
      ws_.async_close(reason, [self = shared_from_this()](beast::error_code) {
        self->Finish();
      });
    }
  }

  void OnWrite(beast::error_code ec, std::size_t) {
    writing_ = false;
    if (ec) {
      Finish();
      return;
    }
    DoWrite();
  }

  void Finish() {
    if (finished_) return;
    finished_ = true;
    if (conn_) hub_.Detach(conn_);
    set_.Remove(shared_from_this());
  }

  websocket::stream<beast::tcp_stream> ws_;
  Hub &hub_;
  SessionSet &set_;
  std::size_t max_frame_;
  beast::flat_buffer buffer_;
  std::shared_ptr<Connection> conn_;
  std::string current_;
  bool writing_ = false;
  bool closing_ = false;
  bool finished_ = false;
  std::optional<std::pair<int, std::string>> close_request_;
};

// Reads the upgrade request; anything that is not a WebSocket upgrade on
// /ws gets a plain HTTP answer.
class HttpSession : public std::enable_shared_from_this<HttpSession> {
 public:
  HttpSession(tcp::socket socket, Hub &hub, SessionSet &set,
              std::size_t max_frame)
      : stream_(std::move(socket)), hub_(hub), set_(set), max_frame_(max_frame) {}

  void Run() {
    stream_.expires_after(std::chrono::seconds(10));
    http::async_read(stream_, buffer_, req_,
                     beast::bind_front_handler(&HttpSession::OnRead,
                                               shared_from_this()));
  }

 private:
  void OnRead(beast::error_code ec, std::size_t) {
    if (ec) return;
    std::string_view target(req_.target().data(), req_.target().size());
    std::string_view path = target.substr(0, target.find('?'));
    if (websocket::is_upgrade(req_) && path == "/ws") {
      stream_.expires_never();
      std::make_shared<WsSession>(stream_.release_socket(), hub_, set_,
                                  max_frame_)
          ->Run(std::move(req_));
      return;
    }
    auto res = std::make_shared<http::response<http::string_body>>();
    res->version(req_.version());
    res->set(http::field::content_type, "text/plain");
    if (path == "/healthz") {
      res->result(http::status::ok);
      res->body() = "ok\n";
    } else if (path == "/ws") {
      res->result(http::status::upgrade_required);
      res->body() = "websocket upgrade required\n";
    } else {
      res->result(http::status::not_found);
      res->body() = "not found\n";
    }
    res->keep_alive(false);
    res->prepare_payload();
    http::async_write(stream_, *res,
                      [self = shared_from_this(), res](beast::error_code,
                                                       std::size_t) {
                        beast::error_code ignored;
                        self->stream_.socket().shutdown(
                            tcp::socket::shutdown_send, ignored);
                      });
  }

  beast::tcp_stream stream_;
  Hub &hub_;
  SessionSet &set_;
  std::size_t max_frame_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> req_;
};

}  // namespace

struct WsServer::Impl {
  Impl(Hub &h, ServerOptions o)
      : hub(h),
        options(std::move(o)),
        ioc(static_cast<int>(std::max<std::size_t>(1, options.io_threads))),
        acceptor(net::make_strand(ioc)),
        timer(ioc) {}

  void Accept() {
    acceptor.async_accept(net::make_strand(ioc),
                          [this](beast::error_code ec, tcp::socket socket) {
                            if (ec) {
                              if (!acceptor.is_open()) return;
                            } else {
                              std::make_shared<HttpSession>(
                                  std::move(socket), hub, sessions,
                                  options.max_frame_bytes)
                                  ->Run();
                            }
                            Accept();
                          });
  }

  void ScheduleTick() {
    timer.expires_after(std::chrono::microseconds(
        static_cast<int64_t>(options.tick_interval_ms * 1000)));
    timer.async_wait([this](beast::error_code ec) {
      if (ec || stopping) return;
      hub.Tick(MonotonicMs());
      ScheduleTick();
    });
  }

  Hub &hub;
  ServerOptions options;
  net::io_context ioc;
  tcp::acceptor acceptor;
  net::steady_timer timer;
  SessionSet sessions;
  std::vector<std::thread> threads;
  std::atomic<bool> stopping{false};
  bool started = false;
  std::string host;
};

WsServer::WsServer(Hub &hub, ServerOptions options)
    : impl_(std::make_unique<Impl>(hub, std::move(options))) {}

WsServer::~WsServer() { Stop(); }

void WsServer::Start() {
  if (impl_->started) return;
  auto [host, port] = ParseBindAddress(impl_->options.bind);
  impl_->host = host;
  beast::error_code ec;
  auto address = net::ip::make_address(host == "localhost" ? "127.0.0.1" : host,
                                       ec);
  if (ec) {
    throw Error(ErrorCode::kConfigInvalid, "bad bind host '" + host + "'");
  }
  tcp::endpoint endpoint(address, port);
  auto &acc = impl_->acceptor;
  acc.open(endpoint.protocol(), ec);
  if (!ec) acc.set_option(net::socket_base::reuse_address(true), ec);
  if (!ec) acc.bind(endpoint, ec);
  if (!ec) acc.listen(net::socket_base::max_listen_connections, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot listen on " + impl_->options.bind + ": " + ec.message());
  }
  impl_->started = true;
  impl_->Accept();
  impl_->ScheduleTick();
  for (std::size_t i = 0; i < std::max<std::size_t>(1, impl_->options.io_threads);
       ++i) {
    impl_->threads.emplace_back([this] { impl_->ioc.run(); });
  }
}

void WsServer::Stop() {
  if (!impl_->started || impl_->stopping.exchange(true)) return;
  net::post(impl_->acceptor.get_executor(), [this] {
    beast::error_code ignored;
    impl_->acceptor.close(ignored);
    impl_->timer.cancel();
  });
  for (auto &s : impl_->sessions.Snapshot()) {
    s->Close(kCloseGoingAway, "server shutting down");
  }
  // Give close handshakes a moment, then stop the loop.
  auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(2);
  while (!impl_->sessions.Snapshot().empty() &&
         std::chrono::steady_clock::now() < deadline) {
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  impl_->ioc.stop();
  for (auto &t : impl_->threads) t.join();
  impl_->threads.clear();
}

uint16_t WsServer::port() const {
  beast::error_code ec;
  auto ep = impl_->acceptor.local_endpoint(ec);
  return ec ? 0 : ep.port();
}

std::string WsServer::url() const {
  return "ws://" + impl_->host + ":" + std::to_string(port()) + "/ws";
}

}  // namespace convoref::hub
