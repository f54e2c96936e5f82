import os
from typing import Iterable, Iterator


class dictutils:
    """
    Dictionary utility helper
    """

    @staticmethod
    def get(dictionary: dict, *keys: str, default=None):
        """
        Traverse a dictionary in a tree-like structure

        :param *keys: Keys to search
        :param default: Value to return if key not found else raise KeyError
        :return: Value
        """
        current_value = dictionary
        for key in keys:
            if isinstance(current_value, dict) and key in current_value:
                current_value = current_value[key]
            else:
                if default is not None:
                    return default
                raise KeyError(f'Key not found: {key}')
        return current_value



class stringutil:
    """
    String utility helper
    """

    @staticmethod
    def join_values(values: Iterable[int], separator: str = ', ', empty: str = '-') -> str:
        """
        Join integers into one string

        :param values: Values to join
        :param separator: Separator between values
        :param empty: Text used when there is no value at all
        :return: Joined string
        """
        text = separator.join(str(value) for value in values)
        return text if text else empty



    @staticmethod
    def split_values(text: str, separator: str = ',', empty: str = '-') -> list[int]:
        """
        Inverse of `join_values`

        :param text: Joined string
        :param separator: Separator between values
        :param empty: Text used when there is no value at all
        :return: Parsed integers
        """
        text = text.strip()
        if not text or text == empty:
            return []
        return [int(part) for part in text.split(separator)]



class fileutil:
    """
    File utility helper
    """

    @staticmethod
    def get_parent_directory(file_path: str) -> str:
        """
        Get the parent directory of a file

        :param file_path: File to process
        :return: Parent directory
        """
        return os.path.dirname(os.path.abspath(file_path))



    @staticmethod
    def ensure_parent_directory(file_path: str):
        """
        Create the parent directory of a file if it does not exist

        :param file_path: File about to be written
        """
        os.makedirs(fileutil.get_parent_directory(file_path), exist_ok=True)



class mathutil:
    """
    Math utility helper
    """

    @staticmethod
    def iter_bits(mask: int) -> Iterator[int]:
        """
        Yield the index of every set bit, lowest first

        :param mask: Non-negative integer bitmap
        """
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low



    @staticmethod
    def residue_mask(length: int, residue: int, modulus: int) -> int:
        """
        Bitmap of the positions 1..length congruent to residue modulo modulus.
        Bit n stands for position n.

        :param length: Last position
        :param residue: Residue class
        :param modulus: Modulus
        :return: Bitmap
        """
        first = residue % modulus
        if first == 0:
            first = modulus
        mask = 0
        for position in range(first, length + 1, modulus):
            mask |= 1 << position
        return mask



    @staticmethod
    def interval_mask(length: int) -> int:
        """
        Bitmap of the positions 1..length

        :param length: Last position
        """
        return ((1 << (length + 1)) - 1) ^ 1
