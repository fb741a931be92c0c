//! Coordinate frame shared by every stage of the construction.
//!
//! All coordinates are non-negative integers on a lattice where one
//! superlattice step (the spacing between adjacent layer planes) is `2c`
//! units. Within a layer, surface-code vertices sit on even coordinates of
//! the layer's two axes and edge qubits on the odd/even mixed positions the
//! usual planar code uses.
//!
//! Plane positions keep three disjoint residue classes so crossing layers
//! never collide:
//!   - qubit layers (xz) at y = 2c·i + 2, an even class,
//!   - yz-layer internal rows on the remaining even y values,
//!   - xy-layer internal rows on odd y values.
//!
//! Z-check planes sit on even x (vertex columns of the qubit layers) and
//! X-check planes on odd z (plaquette rows of the qubit layers).

/// Geometry constants derived from the input shape and the spacing c.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frame {
    /// Superlattice spacing in lattice units (= 2c).
    pub step: i64,
    /// Requested spacing parameter c.
    pub c: usize,
    /// Extent of the cuboid along x: vertex columns live on 0..=lx even.
    pub lx: i64,
    /// Extent along z: vertex rows on 2..=lz-2 even, danglers at 1, lz-1.
    pub lz: i64,
    /// Number of input qubits / X checks / Z checks.
    pub n: usize,
    pub n_x: usize,
    pub n_z: usize,
}

impl Frame {
    /// Placeholder for deserialization; rebuilt from the input afterwards.
    pub fn placeholder() -> Self {
        Self {
            step: 0,
            c: 0,
            lx: 0,
            lz: 0,
            n: 0,
            n_x: 0,
            n_z: 0,
        }
    }

    pub fn new(c: usize, n: usize, n_x: usize, n_z: usize) -> Self {
        let step = 2 * c as i64;
        // One plane per Z check along x and per X check along z. A code
        // with both species present needs two-cell floors: a one-cell
        // patch is crossed by weight-3 strings, short enough to hide
        // inside a defect ball. Single-species codes stay at one cell.
        let floor = if n_x > 0 && n_z > 0 { 2 } else { 1 };
        let lx = step * (n_z.max(floor) as i64);
        let lz = step * (n_x.max(floor) as i64) + 2;
        Self {
            step,
            c,
            lx,
            lz,
            n,
            n_x,
            n_z,
        }
    }

    /// y-coordinate of qubit layer `i`.
    pub fn qubit_plane(&self, i: usize) -> i64 {
        self.step * i as i64 + 2
    }

    /// x-coordinate of the yz-layer for Z check `j`.
    pub fn zcheck_plane(&self, j: usize) -> i64 {
        self.step * j as i64 + 2
    }

    /// z-coordinate of the xy-layer for X check `k`.
    pub fn xcheck_plane(&self, k: usize) -> i64 {
        self.step * k as i64 + 3
    }

    /// Inverse of `qubit_plane`, when `y` is exactly a plane.
    pub fn plane_to_qubit(&self, y: i64) -> Option<usize> {
        if y < 2 || (y - 2) % self.step != 0 {
            return None;
        }
        let i = ((y - 2) / self.step) as usize;
        (i < self.n).then_some(i)
    }

    /// Vertex columns of the in-layer x axis.
    pub fn x_vertex_cols(&self) -> impl Iterator<Item = i64> {
        (0..=self.lx).step_by(2)
    }

    /// x-edge columns (odd x).
    pub fn x_edge_cols(&self) -> impl Iterator<Item = i64> {
        (1..self.lx).step_by(2)
    }

    /// Vertex rows of the shared z axis (excludes dangler rows).
    pub fn z_vertex_rows(&self) -> impl Iterator<Item = i64> {
        (2..=self.lz - 2).step_by(2)
    }

    /// z-edge rows (odd z, including the danglers at 1 and lz-1).
    pub fn z_edge_rows(&self) -> impl Iterator<Item = i64> {
        (1..self.lz).step_by(2)
    }

    pub fn in_x_range(&self, x: i64) -> bool {
        (0..=self.lx).contains(&x)
    }

    pub fn in_z_vertex_range(&self, z: i64) -> bool {
        (2..=self.lz - 2).contains(&z)
    }

    /// The cuboid bounding box (min and max corners).
    pub fn bounding_box(&self, max_plane_y: i64) -> ([i64; 3], [i64; 3]) {
        ([0, 0, 0], [self.lx, max_plane_y + 2, self.lz])
    }
}
