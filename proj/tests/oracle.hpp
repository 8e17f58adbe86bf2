#pragma once

// Brute-force reference engine used to cross-check the library.  It works
// directly on the textual board (a vector of row strings) and shares no code
// with the implementation under test.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Board = std::vector<std::string>;

inline Board to_board(const std::string& text) {
  Board rows;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      rows.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) {
    rows.push_back(cur);
  }
  return rows;
}

inline std::string to_text(const Board& board) {
  std::string text;
  for (const auto& row : board) {
    text += row;
    text += '\n';
  }
  return text;
}

/** Every board reachable in one move or push/pull. */
inline std::vector<Board> successors(const Board& board) {
  std::vector<Board> out;
  const int h = static_cast<int>(board.size());
  const int w = h > 0 ? static_cast<int>(board[0].size()) : 0;
  const int dr[4] = {-1, 0, 0, 1};
  const int dc[4] = {0, -1, 1, 0};
  auto inside = [&](int r, int c) { return r >= 0 && r < h && c >= 0 && c < w; };

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (board[r][c] != 'A') {
        continue;
      }
      for (int d = 0; d < 4; ++d) {
        const int r1 = r + dr[d];
        const int c1 = c + dc[d];
        if (!inside(r1, c1)) {
          continue;
        }
        if (board[r1][c1] == '.') {
          Board next = board;
          std::swap(next[r][c], next[r1][c1]);
          out.push_back(next);
        } else if (board[r1][c1] == 'O') {
          // Push: agent advances, the object shifts one cell further.
          const int r2 = r1 + dr[d];
          const int c2 = c1 + dc[d];
          if (inside(r2, c2) && board[r2][c2] == '.') {
            Board next = board;
            next[r][c] = '.';
            next[r1][c1] = 'A';
            next[r2][c2] = 'O';
            out.push_back(next);
          }
          // Pull: agent retreats, dragging the object into its old cell.
          const int rb = r - dr[d];
          const int cb = c - dc[d];
          if (inside(rb, cb) && board[rb][cb] == '.') {
            Board next = board;
            next[rb][cb] = 'A';
            next[r][c] = 'O';
            next[r1][c1] = '.';
            out.push_back(next);
          }
        }
      }
    }
  }
  return out;
}

/** All boards reachable from `start`, as serialized texts. */
inline std::set<std::string> reachable(const Board& start) {
  std::set<std::string> seen{to_text(start)};
  std::queue<Board> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    const Board cur = frontier.front();
    frontier.pop();
    for (const Board& next : successors(cur)) {
      if (seen.insert(to_text(next)).second) {
        frontier.push(next);
      }
    }
  }
  return seen;
}

/** Undirected transition pairs over the reachable part, as text pairs. */
inline std::set<std::pair<std::string, std::string>> edge_set(const Board& start) {
  std::set<std::pair<std::string, std::string>> edges;
  for (const std::string& text : reachable(start)) {
    const std::string u = text;
    for (const Board& next : successors(to_board(text))) {
      const std::string v = to_text(next);
      edges.insert({std::min(u, v), std::max(u, v)});
    }
  }
  return edges;
}

/** BFS distance between two boards, or -1 when disconnected. */
inline int distance(const Board& from, const Board& to) {
  const std::string target = to_text(to);
  std::map<std::string, int> dist{{to_text(from), 0}};
  std::queue<Board> frontier;
  frontier.push(from);
  while (!frontier.empty()) {
    const Board cur = frontier.front();
    frontier.pop();
    const int d = dist.at(to_text(cur));
    if (to_text(cur) == target) {
      return d;
    }
    for (const Board& next : successors(cur)) {
      if (dist.emplace(to_text(next), d + 1).second) {
        frontier.push(next);
      }
    }
  }
  return -1;
}

}  // namespace oracle
