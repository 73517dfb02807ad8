#pragma once

#include <Eigen/Core>

namespace uvtex {

struct Mesh;

// Pinhole camera, no distortion. Camera space: +x right, +y down in the
// image, +z forward. Pixel coordinates follow the image convention (centers
// at integer + 0.5).
struct Camera {
    double fx = 0, fy = 0;
    double cx = 0, cy = 0;
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity(); // world -> camera
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();
    int width = 0;
    int height = 0;
};

// Throws unless rotation is orthonormal within 1e-6, focal lengths positive
// and image dimensions positive.
void validate_camera(const Camera& camera);

struct Projection {
    double u = 0;
    double v = 0;
    double depth = 0;   // camera-space z
    bool in_front = false; // z > 1e-9; callers treat the point as invisible otherwise
};

Projection project_point(const Camera& camera, const Eigen::Vector3d& p);

// Camera orbiting the mesh bbox center at distance_scale * bbox diagonal,
// looking at the center, world +y up. yaw rotates about +y, pitch tips the
// orbit position up/down (|pitch| < 90). yaw = pitch = 0 gives the fixed
// canonical frontal view used by the synthetic experiments.
Camera make_orbit_camera(const Mesh& mesh, double yaw_deg, double pitch_deg, int width,
                         int height, double distance_scale = 2.5, double fov_scale = 1.0);

} // namespace uvtex
