#include "cocreate/remote.hpp"

#include <fcntl.h>
#include <netdb.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <chrono>
#include <cstring>
#include <set>

#include "cocreate/error.hpp"
#include "cocreate/layout.hpp"
#include "cocreate/serialize.hpp"

namespace cocreate {

namespace {

constexpr std::size_t kMaxReply = 16u << 20;

class Socket {
 public:
  explicit Socket(int fd) : fd_(fd) {}
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;
  ~Socket() {
    if (fd_ >= 0) ::close(fd_);
  }
  int get() const { return fd_; }

 private:
  int fd_;
};

[[noreturn]] void unavailable(const RemoteBackend& b, const std::string& what) {
  throw Error(ErrorCode::BackendUnavailable, "backend " + b.host + ":" + std::to_string(b.port) + ": " + what);
}

using Clock = std::chrono::steady_clock;

int remaining_ms(Clock::time_point deadline) {
  const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
  return left > 0 ? static_cast<int>(left) : 0;
}

void wait_for(const RemoteBackend& b, int fd, short events, Clock::time_point deadline) {
  pollfd p{fd, events, 0};
  for (;;) {
    const int ms = remaining_ms(deadline);
    if (ms == 0) unavailable(b, "timed out");
    const int r = ::poll(&p, 1, ms);
    if (r > 0) return;
    if (r == 0) unavailable(b, "timed out");
    if (errno != EINTR) unavailable(b, std::strerror(errno));
  }
}

int connect_to(const RemoteBackend& b, Clock::time_point deadline) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  const std::string port = std::to_string(b.port);
  if (const int rc = ::getaddrinfo(b.host.c_str(), port.c_str(), &hints, &res); rc != 0) {
    unavailable(b, ::gai_strerror(rc));
  }
  std::string last = "no address";
  for (addrinfo* a = res; a; a = a->ai_next) {
    const int fd = ::socket(a->ai_family, a->ai_socktype | SOCK_CLOEXEC, a->ai_protocol);
    if (fd < 0) continue;
    ::fcntl(fd, F_SETFL, ::fcntl(fd, F_GETFL) | O_NONBLOCK);
    int rc = ::connect(fd, a->ai_addr, a->ai_addrlen);
    if (rc != 0 && errno == EINPROGRESS) {
      pollfd p{fd, POLLOUT, 0};
      if (::poll(&p, 1, remaining_ms(deadline)) == 1) {
        int err = 0;
        socklen_t len = sizeof err;
        ::getsockopt(fd, SOL_SOCKET, SO_ERROR, &err, &len);
        rc = err == 0 ? 0 : -1;
        errno = err;
      } else {
        errno = ETIMEDOUT;
      }
    }
    if (rc == 0) {
      ::freeaddrinfo(res);
      return fd;
    }
    last = std::strerror(errno);
    ::close(fd);
  }
  ::freeaddrinfo(res);
  unavailable(b, last);
}

}  // namespace

RemoteBackend RemoteBackend::parse(std::string_view address) {
  const auto colon = address.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw Error(ErrorCode::InvalidArgument, "backend address must be host:port");
  }
  RemoteBackend b;
  b.host = std::string(address.substr(0, colon));
  const auto digits = address.substr(colon + 1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), b.port);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || b.port <= 0 || b.port > 65535) {
    throw Error(ErrorCode::InvalidArgument, "bad backend port '" + std::string(digits) + "'");
  }
  return b;
}

std::string exchange_line(const RemoteBackend& b, const std::string& line) {
  const auto deadline = Clock::now() + std::chrono::milliseconds(b.timeout_ms);
  Socket sock(connect_to(b, deadline));
  const std::string out = line + "\n";
  std::size_t sent = 0;
  while (sent < out.size()) {
    wait_for(b, sock.get(), POLLOUT, deadline);
    const auto n = ::send(sock.get(), out.data() + sent, out.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EAGAIN || errno == EINTR) continue;
      unavailable(b, std::strerror(errno));
    }
    sent += static_cast<std::size_t>(n);
  }
  std::string reply;
  char buf[8192];
  for (;;) {
    wait_for(b, sock.get(), POLLIN, deadline);
    const auto n = ::recv(sock.get(), buf, sizeof buf, 0);
    if (n < 0) {
      if (errno == EAGAIN || errno == EINTR) continue;
      unavailable(b, std::strerror(errno));
    }
    if (n == 0) break;
    reply.append(buf, static_cast<std::size_t>(n));
    if (const auto nl = reply.find('\n'); nl != std::string::npos) {
      reply.resize(nl);
      return reply;
    }
    if (reply.size() > kMaxReply) throw Error(ErrorCode::DecodeError, "backend reply too large");
  }
  if (reply.empty()) unavailable(b, "connection closed without a reply");
  return reply;
}

CompletionResult remote_complete(const RemoteBackend& backend, const Room& room,
                                 std::span<const SceneObject> existing, const Catalog& catalog,
                                 double lamp_drop) {
  json objects = json::array();
  std::set<std::string> sent;
  for (const auto& o : existing) {
    objects.push_back(to_json(o));
    sent.insert(o.instance_id);
  }
  const json request = {{"type", "complete"}, {"room", to_json(room)}, {"objects", objects}};
  const std::string line = exchange_line(backend, request.dump());

  json reply;
  try {
    reply = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::DecodeError, std::string("backend reply is not JSON: ") + e.what());
  }
  if (!reply.is_object() || !reply.contains("objects") || !reply.at("objects").is_array()) {
    throw Error(ErrorCode::DecodeError, "backend reply lacks an objects array");
  }

  CompletionResult result;
  auto reject = [&](const std::string& subject, const std::string& why) {
    result.warnings.push_back({"RejectedByValidator", subject, why});
  };
  std::vector<Footprint> placed = footprints_of(existing, catalog);
  std::size_t index = 0;
  for (const auto& item : reply.at("objects")) {
    ++index;
    SceneObject o;
    try {
      o = object_from_json(item);
    } catch (const Error& e) {
      reject("#" + std::to_string(index), e.what());
      continue;
    }
    if (sent.count(o.instance_id)) continue;
    if (o.instance_id.empty()) o.instance_id = "remote." + std::to_string(index);
    const FurnitureSpec* spec = catalog.find(o.spec_id);
    if (!spec) {
      reject(o.instance_id, "unknown spec_id '" + o.spec_id + "'");
      continue;
    }
    if (!(o.scale > 0.0)) {
      reject(o.instance_id, "scale must be positive");
      continue;
    }
    o.position.y = spec->placement == PlacementClass::Ceiling
                       ? ceiling_mount_y(room.ceiling_height, lamp_drop, spec->dims.height, o.scale)
                       : 0.0;
    const Footprint fp = footprint_of(o, *spec);
    if (!contains_rect(room, fp.rect)) {
      reject(o.instance_id, "outside the room");
      continue;
    }
    bool clash = false;
    for (const auto& other : placed) {
      if (conflicts(fp, other)) {
        reject(o.instance_id, "overlaps " + other.id);
        clash = true;
        break;
      }
    }
    if (clash) continue;
    placed.push_back(fp);
    sent.insert(o.instance_id);
    result.objects.push_back(std::move(o));
  }
  return result;
}

}  // namespace cocreate
