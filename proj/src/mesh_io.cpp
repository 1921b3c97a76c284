#include <algorithm>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "humrec/mesh.hpp"

namespace humrec {

namespace {

std::string lower_ext(const std::string& path) {
  const size_t dot = path.find_last_of('.');
  if (dot == std::string::npos) return "";
  std::string ext = path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
  return ext;
}

template <typename T>
void write_le(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_le(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}

}  // namespace

TriangleMesh load_obj(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("load_obj: cannot open " + path);
  TriangleMesh mesh;
  bool any_color = false;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "v") {
      float x, y, z;
      ss >> x >> y >> z;
      mesh.vertices.emplace_back(x, y, z);
      float r, g, b;
      if (ss >> r >> g >> b) {
        mesh.colors.resize(mesh.vertices.size(), Vec3f(0.7f, 0.7f, 0.7f));
        mesh.colors.back() = Vec3f(r, g, b);
        any_color = true;
      }
    } else if (tag == "f") {
      std::vector<uint32_t> idx;
      std::string tok;
      while (ss >> tok) {
        // "i", "i/t", "i/t/n", "i//n"
        const long v = std::strtol(tok.c_str(), nullptr, 10);
        if (v == 0) throw std::runtime_error("load_obj: bad face index in " + path);
        idx.push_back(v > 0 ? static_cast<uint32_t>(v - 1)
                            : static_cast<uint32_t>(mesh.vertices.size() + v));
      }
      for (size_t k = 2; k < idx.size(); ++k)
        mesh.triangles.push_back({idx[0], idx[k - 1], idx[k]});
    }
  }
  if (any_color) mesh.colors.resize(mesh.vertices.size(), Vec3f(0.7f, 0.7f, 0.7f));
  mesh.clean_degenerate();
  return mesh;
}

void save_obj(const std::string& path, const TriangleMesh& mesh) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("save_obj: cannot open " + path);
  f.precision(9);
  const bool colors = mesh.has_colors();
  for (size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Vec3f& v = mesh.vertices[i];
    f << "v " << v.x() << " " << v.y() << " " << v.z();
    if (colors) {
      const Vec3f& c = mesh.colors[i];
      f << " " << c.x() << " " << c.y() << " " << c.z();
    }
    f << "\n";
  }
  for (const auto& t : mesh.triangles)
    f << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
  if (!f) throw std::runtime_error("save_obj: write failed for " + path);
}

TriangleMesh load_ply(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("load_ply: cannot open " + path);
  std::string line;
  std::getline(f, line);
  if (line.rfind("ply", 0) != 0) throw std::runtime_error("load_ply: not a PLY file: " + path);

  struct Prop {
    std::string type, name;
  };
  size_t n_verts = 0, n_faces = 0;
  std::vector<Prop> vprops;
  bool binary_le = false, in_vertex = false;
  while (std::getline(f, line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "format") {
      std::string fmt;
      ss >> fmt;
      binary_le = fmt == "binary_little_endian";
      if (!binary_le && fmt != "ascii")
        throw std::runtime_error("load_ply: unsupported format in " + path);
    } else if (tag == "element") {
      std::string what;
      size_t n;
      ss >> what >> n;
      in_vertex = what == "vertex";
      if (in_vertex)
        n_verts = n;
      else if (what == "face")
        n_faces = n;
    } else if (tag == "property") {
      std::string type, name;
      ss >> type >> name;
      if (type == "list") {
        std::string idx_type;
        ss >> idx_type >> name;
      } else if (in_vertex) {
        vprops.push_back({type, name});
      }
    } else if (tag == "end_header") {
      break;
    }
  }

  TriangleMesh mesh;
  mesh.vertices.resize(n_verts);
  bool has_color = false;
  for (const auto& p : vprops)
    if (p.name == "red") has_color = true;
  if (has_color) mesh.colors.resize(n_verts, Vec3f(0.7f, 0.7f, 0.7f));

  auto read_scalar = [&](const std::string& type) -> double {
    if (!binary_le) {
      double v;
      f >> v;
      return v;
    }
    if (type == "float" || type == "float32") return read_le<float>(f);
    if (type == "double" || type == "float64") return read_le<double>(f);
    if (type == "uchar" || type == "uint8") return read_le<uint8_t>(f);
    if (type == "char" || type == "int8") return read_le<int8_t>(f);
    if (type == "short" || type == "int16") return read_le<int16_t>(f);
    if (type == "ushort" || type == "uint16") return read_le<uint16_t>(f);
    if (type == "int" || type == "int32") return read_le<int32_t>(f);
    if (type == "uint" || type == "uint32") return read_le<uint32_t>(f);
    throw std::runtime_error("load_ply: unsupported property type " + type);
  };

  for (size_t i = 0; i < n_verts; ++i) {
    for (const auto& p : vprops) {
      const double v = read_scalar(p.type);
      if (p.name == "x") mesh.vertices[i].x() = static_cast<float>(v);
      else if (p.name == "y") mesh.vertices[i].y() = static_cast<float>(v);
      else if (p.name == "z") mesh.vertices[i].z() = static_cast<float>(v);
      else if (has_color && p.name == "red") mesh.colors[i].x() = static_cast<float>(v / 255.0);
      else if (has_color && p.name == "green") mesh.colors[i].y() = static_cast<float>(v / 255.0);
      else if (has_color && p.name == "blue") mesh.colors[i].z() = static_cast<float>(v / 255.0);
    }
  }
  for (size_t i = 0; i < n_faces; ++i) {
    size_t cnt;
    if (binary_le)
      cnt = read_le<uint8_t>(f);
    else {
      f >> cnt;
    }
    std::vector<uint32_t> idx(cnt);
    for (size_t k = 0; k < cnt; ++k) {
      if (binary_le)
        idx[k] = static_cast<uint32_t>(read_le<int32_t>(f));
      else
        f >> idx[k];
    }
    for (size_t k = 2; k < cnt; ++k) mesh.triangles.push_back({idx[0], idx[k - 1], idx[k]});
  }
  if (!f) throw std::runtime_error("load_ply: truncated file " + path);
  mesh.clean_degenerate();
  return mesh;
}

void save_ply(const std::string& path, const TriangleMesh& mesh,
              const std::vector<Vec3f>* normals) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("save_ply: cannot open " + path);
  const bool colors = mesh.has_colors();
  const bool with_normals = normals && normals->size() == mesh.vertices.size();
  f << "ply\nformat binary_little_endian 1.0\n";
  f << "element vertex " << mesh.vertices.size() << "\n";
  f << "property float x\nproperty float y\nproperty float z\n";
  if (with_normals) f << "property float nx\nproperty float ny\nproperty float nz\n";
  if (colors) f << "property uchar red\nproperty uchar green\nproperty uchar blue\n";
  f << "element face " << mesh.triangles.size() << "\n";
  f << "property list uchar int vertex_indices\nend_header\n";
  for (size_t i = 0; i < mesh.vertices.size(); ++i) {
    write_le(f, mesh.vertices[i].x());
    write_le(f, mesh.vertices[i].y());
    write_le(f, mesh.vertices[i].z());
    if (with_normals) {
      write_le(f, (*normals)[i].x());
      write_le(f, (*normals)[i].y());
      write_le(f, (*normals)[i].z());
    }
    if (colors) {
      const Vec3f& c = mesh.colors[i];
      write_le(f, static_cast<uint8_t>(std::clamp(c.x(), 0.0f, 1.0f) * 255.0f + 0.5f));
      write_le(f, static_cast<uint8_t>(std::clamp(c.y(), 0.0f, 1.0f) * 255.0f + 0.5f));
      write_le(f, static_cast<uint8_t>(std::clamp(c.z(), 0.0f, 1.0f) * 255.0f + 0.5f));
    }
  }
  for (const auto& t : mesh.triangles) {
    write_le(f, static_cast<uint8_t>(3));
    write_le(f, static_cast<int32_t>(t[0]));
    write_le(f, static_cast<int32_t>(t[1]));
    write_le(f, static_cast<int32_t>(t[2]));
  }
  if (!f) throw std::runtime_error("save_ply: write failed for " + path);
}

TriangleMesh load_mesh(const std::string& path) {
  const std::string ext = lower_ext(path);
  if (ext == "obj") return load_obj(path);
  if (ext == "ply") return load_ply(path);
  throw std::runtime_error("load_mesh: unsupported extension ." + ext + " for " + path);
}

void save_mesh(const std::string& path, const TriangleMesh& mesh) {
  const std::string ext = lower_ext(path);
  if (ext == "obj")
    save_obj(path, mesh);
  else if (ext == "ply")
    save_ply(path, mesh);
  else
    throw std::runtime_error("save_mesh: unsupported extension ." + ext + " for " + path);
}

}  // namespace humrec
