#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <vendokit/error.hpp>
#include <vendokit/registry.hpp>

#include <thread>

namespace vendokit {

HttpStore::HttpStore(std::string base_url, RetryPolicy policy)
    : _base_url(std::move(base_url)), _policy(policy) {
    while (_base_url.ends_with('/')) {
        _base_url.pop_back();
    }
    const auto scheme_end = _base_url.find("://");
    if (scheme_end == std::string::npos) {
        throw Error(Errc::TransportError, "not an HTTP(S) URL: " + _base_url);
    }
    const auto path_start = _base_url.find('/', scheme_end + 3);
    _scheme_host_port = _base_url.substr(0, path_start);
    _base_path = path_start == std::string::npos ? "" : _base_url.substr(path_start);
}

std::string HttpStore::read(std::string_view relative_path) const {
    const auto target = _base_path + "/" + std::string(relative_path);
    const auto url = _base_url + "/" + std::string(relative_path);

    std::string last_failure;
    for (int attempt = 0; attempt <= _policy.retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(_policy.delay);
        }
        httplib::Client client(_scheme_host_port);
        client.set_connection_timeout(_policy.timeout);
        client.set_read_timeout(_policy.timeout);
        client.set_follow_location(true);

        auto res = client.Get(target);
        if (!res) {
            last_failure = httplib::to_string(res.error());
            continue;
        }
        if (res->status == 200) {
            return std::move(res->body);
        }
        if (res->status == 404 || res->status == 410) {
            throw Error(Errc::NotFound, "not found: " + url);
        }
        if (res->status >= 400 && res->status < 500) {
            throw Error(Errc::TransportError,
                        "GET " + url + " failed with HTTP " + std::to_string(res->status));
        }
        last_failure = "HTTP " + std::to_string(res->status);
    }
    throw Error(Errc::TransportError, "GET " + url + " failed after " +
                                          std::to_string(_policy.retries + 1) +
                                          " attempt(s): " + last_failure);
}

}  // namespace vendokit
