//! Fixed-width bit table used for semigroup membership.

type Block = u64;
const BITS: usize = Block::BITS as usize;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct BitTable {
    len: usize,
    blocks: Vec<Block>,
}

impl BitTable {
    pub(crate) fn zeros(len: usize) -> Self {
        BitTable {
            len,
            blocks: vec![0; len.div_ceil(BITS)],
        }
    }

    pub(crate) fn ones(len: usize) -> Self {
        let mut t = BitTable {
            len,
            blocks: vec![Block::MAX; len.div_ceil(BITS)],
        };
        t.trim();
        t
    }

    fn trim(&mut self) {
        let extra = self.len % BITS;
        if extra != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1 << extra) - 1;
            }
        }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / BITS] >> (i % BITS) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / BITS] |= 1 << (i % BITS);
    }

    #[inline]
    pub(crate) fn clear(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / BITS] &= !(1 << (i % BITS));
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(b, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(b * BITS + tz)
            })
        })
    }
}
