// Copyright 2026 The Authors.
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

#include "parascope/http_server.hpp"

#include <httplib.h>

namespace parascope {

namespace {

void reply(httplib::Response& res, const ApiResponse& r) {
  res.status = r.status;
  res.set_content(r.dump(), "application/json");
}

std::optional<std::string> param(const httplib::Request& req, const char* key) {
  if (!req.has_param(key)) return std::nullopt;
  return req.get_param_value(key);
}

}  // namespace

HttpServer::HttpServer(Service& service)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  auto& s = *server_;
  s.Post("/sessions", [this](const httplib::Request&, httplib::Response& res) {
    reply(res, service_.create_session());
  });
  s.Get("/search", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, service_.search(param(req, "q"), param(req, "session_id")));
  });
  s.Get(R"(/paragraphs/([^/]+)/similar)", [this](const httplib::Request& req,
                                                  httplib::Response& res) {
    reply(res, service_.similar(req.matches[1], param(req, "session_id")));
  });
  s.Get(R"(/paragraphs/([^/]+)/paper)", [this](const httplib::Request& req,
                                                httplib::Response& res) {
    reply(res, service_.paragraph_paper(req.matches[1]));
  });
  s.Get(R"(/papers/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, service_.paper(req.matches[1]));
  });
  s.Post(R"(/sessions/([^/]+)/events)", [this](const httplib::Request& req,
                                               httplib::Response& res) {
    reply(res, service_.post_event(req.matches[1], req.body));
  });
  s.Get(R"(/sessions/([^/]+)/progress)", [this](const httplib::Request& req,
                                                httplib::Response& res) {
    reply(res, service_.session_progress(req.matches[1]));
  });
  s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      reply(res, error_response(res.status, "no route for this request"));
    }
  });
  s.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                             std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    reply(res, error_response(500, message));
  });
}

HttpServer::~HttpServer() = default;

bool HttpServer::listen(const std::string& host, int port) { return server_->listen(host, port); }

int HttpServer::bind_any_port(const std::string& host) { return server_->bind_to_any_port(host); }

bool HttpServer::listen_after_bind() { return server_->listen_after_bind(); }

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

void HttpServer::stop() { server_->stop(); }

}  // namespace parascope
