#include "uvtex/camera.hpp"

#include <cmath>
#include <stdexcept>

#include "uvtex/mesh.hpp"

namespace uvtex {

void validate_camera(const Camera& camera) {
    if (!(camera.fx > 0.0) || !(camera.fy > 0.0))
        throw std::runtime_error("camera: focal lengths must be positive");
    if (camera.width <= 0 || camera.height <= 0)
        throw std::runtime_error("camera: image dimensions must be positive");
    const Eigen::Matrix3d defect =
        camera.rotation * camera.rotation.transpose() - Eigen::Matrix3d::Identity();
    if (defect.cwiseAbs().maxCoeff() > 1e-6)
        throw std::runtime_error("camera: rotation is not orthonormal");
}

Projection project_point(const Camera& camera, const Eigen::Vector3d& p) {
    const Eigen::Vector3d q = camera.rotation * p + camera.translation;
    Projection out;
    out.depth = q.z();
    out.in_front = q.z() > 1e-9;
    if (out.in_front) {
        out.u = camera.fx * q.x() / q.z() + camera.cx;
        out.v = camera.fy * q.y() / q.z() + camera.cy;
    }
    return out;
}

Camera make_orbit_camera(const Mesh& mesh, double yaw_deg, double pitch_deg, int width,
                         int height, double distance_scale, double fov_scale) {
    if (width <= 0 || height <= 0)
        throw std::runtime_error("make_orbit_camera: image dimensions must be positive");
    const Bbox box = mesh_bbox(mesh);
    const Eigen::Vector3d center = box.center();
    const double diag = box.diagonal();
    if (!(diag > 0)) throw std::runtime_error("make_orbit_camera: degenerate mesh bbox");

    const double yaw = yaw_deg * M_PI / 180.0;
    const double pitch = pitch_deg * M_PI / 180.0;
    const Eigen::Vector3d dir(std::sin(yaw) * std::cos(pitch), std::sin(pitch),
                              std::cos(yaw) * std::cos(pitch));
    const double dist = distance_scale * diag;
    const Eigen::Vector3d eye = center + dist * dir;

    const Eigen::Vector3d forward = (center - eye).normalized();
    Eigen::Vector3d right = forward.cross(Eigen::Vector3d(0, 1, 0));
    if (right.norm() < 1e-9) right = Eigen::Vector3d(1, 0, 0); // looking straight up/down
    right.normalize();
    const Eigen::Vector3d down = forward.cross(right).normalized();

    Camera cam;
    cam.rotation.row(0) = right;
    cam.rotation.row(1) = down;
    cam.rotation.row(2) = forward;
    cam.translation = -cam.rotation * eye;
    cam.width = width;
    cam.height = height;
    cam.fx = cam.fy = fov_scale * 0.75 * std::min(width, height) * dist / diag;
    cam.cx = 0.5 * width;
    cam.cy = 0.5 * height;
    return cam;
}

} // namespace uvtex
