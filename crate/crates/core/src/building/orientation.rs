use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cardinal facade orientation (direction of the outward normal).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    North,
    East,
    South,
    West,
}

impl Orientation {
    pub const ALL: [Orientation; 4] = [
        Orientation::East,
        Orientation::South,
        Orientation::West,
        Orientation::North,
    ];

    /// Azimuth of the outward normal, degrees clockwise from North.
    pub fn azimuth(self) -> f64 {
        match self {
            Orientation::North => 0.0,
            Orientation::East => 90.0,
            Orientation::South => 180.0,
            Orientation::West => 270.0,
        }
    }

    pub fn opposite(self) -> Orientation {
        match self {
            Orientation::North => Orientation::South,
            Orientation::South => Orientation::North,
            Orientation::East => Orientation::West,
            Orientation::West => Orientation::East,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::North => "north",
            Orientation::East => "east",
            Orientation::South => "south",
            Orientation::West => "west",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Snap an azimuth in `[0, 360)` to the nearest cardinal direction.
///
/// Ties at the intercardinal points go to East over North and South, North over
/// West, and South over West:
///
/// | arc            | orientation |
/// |----------------|-------------|
/// | `[315, 45)`    | North       |
/// | `[45, 135]`    | East        |
/// | `(135, 225]`   | South       |
/// | `(225, 315)`   | West        |
pub fn orientation_from_azimuth(azimuth: f64) -> Result<Orientation> {
    if !azimuth.is_finite() || !(0.0..360.0).contains(&azimuth) {
        return Err(Error::invalid(format!("azimuth {azimuth} is outside [0, 360)")));
    }
    let o = if !(45.0..315.0).contains(&azimuth) {
        Orientation::North
    } else if azimuth <= 135.0 {
        Orientation::East
    } else if azimuth <= 225.0 {
        Orientation::South
    } else {
        Orientation::West
    };
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cardinal_examples() {
        assert_eq!(orientation_from_azimuth(0.0).unwrap(), Orientation::North);
        assert_eq!(orientation_from_azimuth(100.0).unwrap(), Orientation::East);
        assert_eq!(orientation_from_azimuth(180.0).unwrap(), Orientation::South);
        assert_eq!(orientation_from_azimuth(270.0).unwrap(), Orientation::West);
    }

    #[test]
    fn tie_breaks() {
        assert_eq!(orientation_from_azimuth(45.0).unwrap(), Orientation::East);
        assert_eq!(orientation_from_azimuth(135.0).unwrap(), Orientation::East);
        assert_eq!(orientation_from_azimuth(225.0).unwrap(), Orientation::South);
        assert_eq!(orientation_from_azimuth(315.0).unwrap(), Orientation::North);
    }

    #[test]
    fn out_of_range() {
        assert!(orientation_from_azimuth(360.0).is_err());
        assert!(orientation_from_azimuth(-0.5).is_err());
        assert!(orientation_from_azimuth(f64::NAN).is_err());
    }

    proptest! {
        #[test]
        fn nearest_cardinal(az in 0.0f64..360.0) {
            let o = orientation_from_azimuth(az).unwrap();
            let dist = |c: f64| {
                let d = (az - c).rem_euclid(360.0);
                d.min(360.0 - d)
            };
            let best = Orientation::ALL
                .iter()
                .map(|c| dist(c.azimuth()))
                .fold(f64::INFINITY, f64::min);
            prop_assert!((dist(o.azimuth()) - best).abs() < 1e-9);
        }

        #[test]
        fn constant_on_arcs(arc in 0usize..4, t in 0.001f64..0.999) {
            // open interior of each 90-degree arc, centred on the cardinal
            let centre = [0.0, 90.0, 180.0, 270.0][arc];
            let az = (centre - 45.0 + 90.0 * t).rem_euclid(360.0);
            let expected = [Orientation::North, Orientation::East, Orientation::South, Orientation::West][arc];
            prop_assert_eq!(orientation_from_azimuth(az).unwrap(), expected);
        }
    }
}
