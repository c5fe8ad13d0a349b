//! Local vertex environments and the six-vertex weight classes.

/// Six occupancy bits: W, N, NW incoming; E, S, SE outgoing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexEnvironment(u8);

const W: u8 = 1;
const N: u8 = 2;
const NW: u8 = 4;
const E: u8 = 8;
const S: u8 = 16;
const SE: u8 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub valid: bool,
    /// 1..=20 in increasing bit-pattern order; None when invalid.
    pub vertex_id: Option<u8>,
}

/// Six-vertex weight class in the path picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SixVertexType {
    /// empty, or two paths kissing (W,N in; E,S out)
    A,
    /// straight through
    B,
    /// a turn W→S or N→E
    C,
}

impl VertexEnvironment {
    pub fn from_bits(bits: u8) -> Self {
        Self(bits & 63)
    }

    pub fn from_edges(w: bool, n: bool, nw: bool, e: bool, s: bool, se: bool) -> Self {
        Self(
            ((w as u8) * W)
                | ((n as u8) * N)
                | ((nw as u8) * NW)
                | ((e as u8) * E)
                | ((s as u8) * S)
                | ((se as u8) * SE),
        )
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn w(self) -> bool {
        self.0 & W != 0
    }
    pub fn n(self) -> bool {
        self.0 & N != 0
    }
    pub fn nw(self) -> bool {
        self.0 & NW != 0
    }
    pub fn e(self) -> bool {
        self.0 & E != 0
    }
    pub fn s(self) -> bool {
        self.0 & S != 0
    }
    pub fn se(self) -> bool {
        self.0 & SE != 0
    }

    pub fn in_count(self) -> u32 {
        (self.0 & 7).count_ones()
    }

    pub fn out_count(self) -> u32 {
        (self.0 >> 3).count_ones()
    }

    pub fn is_valid(self) -> bool {
        self.in_count() == self.out_count()
    }

    /// (h, v, d) = (W - E, N - S, NW - SE); zero means transmission along
    /// that direction.
    pub fn triple(self) -> (i8, i8, i8) {
        (
            self.w() as i8 - self.e() as i8,
            self.n() as i8 - self.s() as i8,
            self.nw() as i8 - self.se() as i8,
        )
    }

    /// Weight class when no diagonal edge is occupied.
    pub fn six_vertex_type(self) -> Option<SixVertexType> {
        if !self.is_valid() || self.nw() || self.se() {
            return None;
        }
        Some(match (self.w(), self.n(), self.e(), self.s()) {
            (false, false, false, false) | (true, true, true, true) => SixVertexType::A,
            (true, false, true, false) | (false, true, false, true) => SixVertexType::B,
            _ => SixVertexType::C,
        })
    }

    /// Every valid environment, in increasing bit order.
    pub fn all_valid() -> Vec<Self> {
        (0u8..64).map(Self).filter(|e| e.is_valid()).collect()
    }
}

pub fn classify_vertex(env: VertexEnvironment) -> Classification {
    if !env.is_valid() {
        return Classification { valid: false, vertex_id: None };
    }
    let rank = (0..env.0).filter(|&b| VertexEnvironment(b).is_valid()).count();
    Classification { valid: true, vertex_id: Some(rank as u8 + 1) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_environments() {
        assert_eq!(VertexEnvironment::all_valid().len(), 20);
        let full = VertexEnvironment::from_bits(63);
        assert!(classify_vertex(full).valid);
        assert_eq!(classify_vertex(full).vertex_id, Some(20));
        assert_eq!(classify_vertex(VertexEnvironment::from_bits(0)).vertex_id, Some(1));
        let only_w = VertexEnvironment::from_edges(true, false, false, false, false, false);
        assert_eq!(classify_vertex(only_w), Classification { valid: false, vertex_id: None });
    }

    #[test]
    fn six_vertex_classes() {
        let turn = VertexEnvironment::from_edges(true, false, false, false, true, false);
        assert_eq!(turn.six_vertex_type(), Some(SixVertexType::C));
        let kiss = VertexEnvironment::from_edges(true, true, false, true, true, false);
        assert_eq!(kiss.six_vertex_type(), Some(SixVertexType::A));
        let through = VertexEnvironment::from_edges(false, true, false, false, true, false);
        assert_eq!(through.six_vertex_type(), Some(SixVertexType::B));
        let n6: usize = VertexEnvironment::all_valid()
            .into_iter()
            .filter(|e| e.six_vertex_type().is_some())
            .count();
        assert_eq!(n6, 6);
    }
}
