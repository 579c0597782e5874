//! Multi-view LiDAR-camera fusion for 3D human pose estimation.
//!
//! The crate covers the deterministic core of a sparse-sensor motion-capture
//! pipeline: synthetic scenes with capsule-body avatars, simulated LiDAR scan
//! patterns over rendered depth, volumetric fusion of per-view 2D joint
//! heatmaps, soft-argmax pose extraction with entropy-based uncertainty,
//! entropy-gated pseudo-label filtering, an unsupervised loss stack with
//! analytic gradients, a DLT triangulation baseline, and evaluation metrics
//! (MPJPE, PA-MPJPE, yaw-box IoU, average precision).
//!
//! Conventions, used everywhere without further comment:
//!
//! * World frame: right-handed, z-up, units are meters.
//! * Cameras look along +z of their own frame; `rotation` maps world to
//!   camera coordinates.
//! * Pixel coordinates are continuous: u right, v down, and the pixel with
//!   integer index (i, j) covers [i, i+1) x [j, j+1) with center
//!   (i + 0.5, j + 0.5).
//! * Depth maps store the Euclidean distance from the camera center along
//!   the pixel's center ray (range, not z-depth), with `f32::INFINITY` as
//!   the no-return sentinel.
//! * Every randomized operation takes an explicit seed and is reproducible
//!   bit for bit.
//!
//! With the default `parallel` feature the hot loops (depth rendering,
//! volumetric back-projection) run on rayon. The `*_seq` variants are the
//! single-threaded reference paths; both produce bit-identical results, and
//! `benches/parallel_paths.rs` compares them.

pub mod estimate;
pub mod geom;
pub mod io;
pub mod lidar;
pub mod losses;
pub mod metrics;
pub mod synth;
pub mod voxel;
